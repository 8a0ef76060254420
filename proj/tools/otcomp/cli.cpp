#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "otcomp/checker.hpp"
#include "otcomp/document.hpp"
#include "otcomp/error.hpp"
#include "otcomp/expression.hpp"
#include "otcomp/simulator.hpp"

namespace otcomp::cli {
namespace {

struct Output {
  std::string path;
  std::string format = "json";
  bool timing = true;
};

void add_bounds(CLI::App* cmd, Bounds& b) {
  cmd->add_option("--alphabet", b.alphabet, "characters 'a'.. in the alphabet")->capture_default_str();
  cmd->add_option("--nat-max", b.nat_max, "largest natural number")->capture_default_str();
  cmd->add_option("--colors", b.colors, "colors from red, green, blue")->capture_default_str();
  cmd->add_option("--universe", b.universe, "atoms of a bare set")->capture_default_str();
  cmd->add_option("--max-len", b.max_len, "longest enumerated string")->capture_default_str();
  cmd->add_option("--depth", b.depth, "context depth for observational equality")->capture_default_str();
  cmd->add_option("--sites", b.sites, "site ids 1..N for string methods")->capture_default_str();
}

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "write the report to PATH");
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_flag("!--no-timing", o.timing, "leave elapsed_ms out of JSON reports");
}

// Applies OTCOMP_MAX_CASES on top of the flags.
void apply_environment(Bounds& b) {
  const char* env = std::getenv("OTCOMP_MAX_CASES");
  if (!env || !*env) return;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v <= 0) {
    throw Error(ErrorCode::kInvalidBounds, std::string("OTCOMP_MAX_CASES must be a positive integer, got ") + env);
  }
  b.max_cases = v;
}

// Writes `body` to --out (and a one-line summary to out) or to out.
void emit(const Output& o, const std::string& body, const std::string& summary, std::ostream& out) {
  if (o.path.empty()) {
    out << body;
    if (!body.empty() && body.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.path);
  f << body;
  if (!body.empty() && body.back() != '\n') f << '\n';
  out << summary << '\n';
}

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::kPass: return kPass;
    case Verdict::kFail: return kFail;
    case Verdict::kVacuous: return kVacuous;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operational-transformation components: build, check CP1/CP2, simulate", "otcomp"};
  app.require_subcommand(1);

  Bounds bounds;
  Output output;

  std::string expr;
  std::string property;
  bool cp2_literal = false;
  bool obs_equality = false;
  auto* check = app.add_subcommand("check", "run a convergence check on a composition expression");
  check->add_option("EXPR", expr, "composition expression, e.g. \"set-guarded[cchar]\"")->required();
  check->add_option("--property", property, "property to check")
      ->required()
      ->check(CLI::IsMember({"cp1", "cp2", "consistency"}));
  check->add_flag("--cp2-literal", cp2_literal, "fail CP2 on discrepancies no legal state reaches");
  check->add_flag("--obs-equality", obs_equality, "compare CP1 finals observationally up to --depth");
  add_bounds(check, bounds);
  add_output(check, output);

  std::string scenario_path;
  auto* simulate = app.add_subcommand("simulate", "integrate a scenario under every delivery order");
  simulate->add_option("PATH", scenario_path, "scenario file")->required();
  add_bounds(simulate, bounds);
  add_output(simulate, output);

  bool demo_check = false;
  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  auto* document = demo->add_subcommand("document", "build the document tower and edit an FWORD");
  document->add_flag("--check", demo_check, "also check consistency of FCHAR");
  add_output(document, output);

  auto* list = app.add_subcommand("list", "registered components and patterns");
  list->add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::vector<const char*> argv{"otcomp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "otcomp: " << e.what() << '\n';
    return kUsage;
  }

  try {
    apply_environment(bounds);
    const bool text = output.format == "text";

    if (check->parsed()) {
      bounds.validate();
      const auto c = build_expression(expr, bounds);
      CheckOptions opts;
      opts.cp2 = cp2_literal ? Cp2Semantics::kLiteral : Cp2Semantics::kRealizable;
      if (obs_equality) {
        opts.equality = StateEquality::kObservational;
        opts.obs_depth = bounds.depth;
      }
      CheckReport r;
      if (property == "cp1") {
        r = check_cp1(*c, bounds, opts);
      } else if (property == "cp2") {
        r = check_cp2(*c, bounds, opts);
      } else {
        r = check_consistency(*c, bounds, opts);
      }
      emit(output, text ? to_text(r) : to_json(*c, r, output.timing).dump(2),
           r.label + " " + c->name() + ": " + to_string(r.verdict), out);
      return verdict_status(r.verdict);
    }

    if (simulate->parsed()) {
      bounds.validate();
      Scenario s;
      RunReport r;
      try {
        s = load_scenario_file(scenario_path, bounds);
        r = run_scenario(s);
      } catch (const Error& e) {
        err << "otcomp: " << scenario_path << ": " << e.what() << '\n';
        return kUsage;
      }
      emit(output, text ? to_text(r) : to_json(*s.component, r, output.timing).dump(2),
           r.component + ": " + (r.converged ? "converged" : "diverged"), out);
      return r.converged ? kPass : kFail;
    }

    if (document->parsed()) {
      const auto d = run_document_demo(demo_check);
      emit(output, text ? to_text(d) : to_json(d, output.timing).dump(2),
           std::string("document demo: ") + (d.ok() ? "ok" : "failed"), out);
      return d.ok() ? kPass : kFail;
    }

    if (list->parsed()) {
      if (text) {
        for (const auto& e : registry()) out << e.name << "\t" << e.kind << "\t" << e.description << '\n';
      } else {
        Json j = Json::array();
        for (const auto& e : registry()) {
          j.push_back(Json{{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
        }
        out << j.dump(2) << '\n';
      }
      return kPass;
    }
  } catch (const ParseError& e) {
    err << "otcomp: " << e.what() << '\n';
    if (check->parsed()) err << "  " << expr << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "otcomp: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace otcomp::cli
