#include "otcomp/document.hpp"

#include <sstream>

#include "otcomp/composition.hpp"
#include "otcomp/error.hpp"
#include "otcomp/primitives.hpp"

namespace otcomp {

const DocumentLevel& DocumentTower::level(const std::string& label) const {
  for (const auto& l : levels) {
    if (l.label == label) return l;
  }
  throw Error(ErrorCode::kUnknownComponent, "no document level " + label);
}

Bounds document_bounds() {
  Bounds b;
  b.alphabet = 1;
  b.nat_max = 1;
  b.colors = 1;
  b.universe = 1;
  b.max_len = 1;
  b.depth = 1;
  return b;
}

DocumentTower build_document_tower(const Bounds& b) {
  b.validate();
  DocumentTower t;
  t.bounds = b;
  const auto strings = string_pattern();
  auto decorate = [](ComponentPtr c) {
    return static_compose({std::move(c), cnat(), ccolor()}, NamePolicy::kRequireDisjoint);
  };

  ComponentPtr current = decorate(cchar());
  t.levels.push_back({"FCHAR", current, std::nullopt});
  for (const char* name : {"WORD", "SENTENCE", "PARAGRAPH", "PAGE"}) {
    AdmissibilityReport report;
    ComponentPtr nested = dynamic_compose(strings, current, b, &report);
    t.levels.push_back({name, nested, report});
    current = decorate(nested);
    t.levels.push_back({std::string("F") + name, current, std::nullopt});
  }
  return t;
}

Json fword_scenario_json() {
  const Json plain = Json::array({"a", 0, "red"});
  return Json{
      {"component", "string[cchar (+) cnat (+) ccolor] (+) cnat (+) ccolor"},
      {"base", Json::array({Json::array({plain, plain}), 1, "red"})},
      {"ops",
       Json::array({
           Json{{"site", 1}, {"method", {{"ctor", "Ins"}, {"args", Json::array({0, Json::array({"b", 2, "blue"})})}}}},
           Json{{"site", 2},
                {"method",
                 {{"ctor", "Update"},
                  {"args", Json::array({1, plain, Json{{"ctor", "putcolor"}, {"args", Json::array({"green"})}}})}}}},
       })},
      {"delivery", "all"},
  };
}

bool DocumentDemo::ok() const {
  bool admissible = true;
  for (const auto& l : tower.levels) {
    if (l.admissibility && !l.admissibility->passed) admissible = false;
  }
  return admissible && tower.levels.size() == 9 && fword.converged && !fword.partially_legal &&
         (!fchar_consistency || fchar_consistency->passed());
}

DocumentDemo run_document_demo(bool check, const Bounds& b) {
  DocumentDemo demo{build_document_tower(b), {}, std::nullopt};
  auto scenario = load_scenario(fword_scenario_json(), b);
  // Run on the tower's own FWORD rather than a rebuilt copy.
  scenario.component = demo.tower.level("FWORD").component;
  demo.fword = run_scenario(scenario);
  if (check) demo.fchar_consistency = check_consistency(*demo.tower.level("FCHAR").component, Bounds{});
  return demo;
}

Json to_json(const DocumentDemo& demo, bool with_elapsed) {
  Json j;
  j["levels"] = Json::array();
  for (const auto& l : demo.tower.levels) {
    Json jl;
    jl["label"] = l.label;
    jl["expression"] = l.component->name();
    jl["methods"] = l.component->methods().size();
    jl["attributes"] = l.component->attributes().size();
    if (l.admissibility) {
      jl["admissible"] = l.admissibility->passed;
      jl["child_states"] = l.admissibility->states;
    }
    j["levels"].push_back(std::move(jl));
  }
  const auto& fword = *demo.tower.level("FWORD").component;
  j["fword_scenario"] = to_json(fword, demo.fword, with_elapsed);
  if (demo.fchar_consistency) {
    j["fchar_consistency"] =
        to_json(*demo.tower.level("FCHAR").component, *demo.fchar_consistency, with_elapsed);
  }
  j["ok"] = demo.ok();
  return j;
}

std::string to_text(const DocumentDemo& demo) {
  std::ostringstream out;
  out << "document tower (" << demo.tower.levels.size() << " components)\n";
  for (const auto& l : demo.tower.levels) {
    out << "  " << l.label << ": " << l.component->methods().size() << " methods, "
        << l.component->attributes().size() << " attributes";
    if (l.admissibility) {
      out << ", child admissible over " << l.admissibility->states << " states: "
          << (l.admissibility->passed ? "yes" : "no");
    }
    out << "\n    " << l.component->name() << "\n";
  }
  out << "FWORD scenario: " << to_text(demo.fword);
  if (demo.fchar_consistency) out << "FCHAR consistency:\n" << to_text(*demo.fchar_consistency);
  return out.str();
}

}  // namespace otcomp
