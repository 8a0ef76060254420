#include "otcomp/checker.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "otcomp/composition.hpp"
#include "otcomp/error.hpp"
#include "otcomp/kernel.hpp"
#include "otcomp/update.hpp"

namespace otcomp {

std::string to_string(Property p) {
  switch (p) {
    case Property::kCp1: return "CP1";
    case Property::kCp2: return "CP2";
    case Property::kCp1Restricted: return "CP1-restricted";
    case Property::kCp2Restricted: return "CP2-restricted";
    case Property::kConsistency: return "consistency";
    case Property::kCommutation: return "commutation";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kVacuous: return "vacuous";
  }
  return "?";
}

MethodClass all_methods() {
  return {"all", [](const Method& m) { return !m.is_nop(); }};
}

MethodClass update_methods() {
  return {"updates", [](const Method& m) { return is_update(m); }};
}

MethodClass pattern_methods() {
  return {"pattern", [](const Method& m) { return !m.is_nop() && !is_update(m); }};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_site(const Method& a, const Method& b) {
  return a.site() && b.site() && *a.site() == *b.site();
}

bool states_equal(const Component& c, const State& a, const State& b, const CheckOptions& o,
                  const Bounds& bounds) {
  if (o.equality == StateEquality::kStructural) return a == b;
  return obs_equal(c, a, b, o.obs_depth, bounds);
}

void finish(CheckReport& r) {
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::kFail;
  } else {
    r.verdict = r.cases > 0 ? Verdict::kPass : Verdict::kVacuous;
  }
}

void self_check(const Component& c, CheckReport& r, const CheckOptions& o, const Bounds& b) {
  auto check = [&](std::vector<Witness>& ws) {
    for (auto& w : ws) {
      if (!replay_witness(c, w, o, b)) {
        throw std::logic_error("witness does not replay: " + to_string(w.methods));
      }
      w.replayed = true;
    }
  };
  check(r.witnesses);
  check(r.unrealized);
}

using PairFilter = std::function<bool(const Method&, const Method&)>;
using TripleFilter = std::function<bool(const Method&, const Method&, const Method&)>;

CheckReport sweep_cp1(const Component& c, const Bounds& b, const CheckOptions& o, Property property,
                      std::string label, const PairFilter& keep) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.component = c.name();
  r.property = property;
  r.label = std::move(label);

  const auto methods = c.enum_methods(b);
  const double n = static_cast<double>(methods.size());
  // The estimate is on the state list size, which is only known after
  // enumeration; enum_states refuses oversized universes on its own.
  const auto states = c.enum_states(b);
  b.require_within(static_cast<double>(states.size()) * n * n, "CP1 sweep of " + c.name());

  struct Pair {
    std::size_t i, j;
    Method t21, t12;  // IT(m2, m1), IT(m1, m2)
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = 0; j < methods.size(); ++j) {
      const auto& m1 = methods[i];
      const auto& m2 = methods[j];
      if (!keep(m1, m2) || same_site(m1, m2)) continue;
      pairs.push_back({i, j, transform(c, m2, m1), transform(c, m1, m2)});
    }
  }

  std::vector<char> on(methods.size());
  std::vector<std::optional<State>> after(methods.size());
  for (const auto& s : states) {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      on[i] = enabled(c, methods[i], s) ? 1 : 0;
      after[i].reset();
    }
    r.examined += static_cast<std::int64_t>(pairs.size());
    for (const auto& p : pairs) {
      if (!on[p.i] || !on[p.j]) continue;
      if (!after[p.i]) after[p.i] = apply(c, methods[p.i], s);
      if (!after[p.j]) after[p.j] = apply(c, methods[p.j], s);
      const State& s1 = *after[p.i];
      const State& s2 = *after[p.j];
      if (!enabled(c, p.t21, s1) || !enabled(c, p.t12, s2)) continue;
      ++r.cases;
      State f1 = apply(c, p.t21, s1);
      State f2 = apply(c, p.t12, s2);
      if (!states_equal(c, f1, f2, o, b)) {
        Witness w;
        w.kind = WitnessKind::kCp1;
        w.state = s;
        w.methods = {methods[p.i], methods[p.j]};
        w.left = std::move(f1);
        w.right = std::move(f2);
        r.witnesses.push_back(std::move(w));
      }
    }
  }
  self_check(c, r, o, b);
  finish(r);
  r.elapsed_ms = ms_since(t0);
  return r;
}

// First enumerated state at which m1, m2 and m3 are all enabled and both
// CP1 sequences are legal.
std::optional<State> realizing_state(const Component& c, const std::vector<State>& states,
                                     const Method& m1, const Method& m2, const Method& m3) {
  const auto t21 = transform(c, m2, m1);
  const auto t12 = transform(c, m1, m2);
  for (const auto& s : states) {
    if (!enabled(c, m1, s) || !enabled(c, m2, s) || !enabled(c, m3, s)) continue;
    if (legal(c, {m1, t21}, s) && legal(c, {m2, t12}, s)) return s;
  }
  return std::nullopt;
}

CheckReport sweep_cp2(const Component& c, const Bounds& b, const CheckOptions& o, Property property,
                      std::string label, const PairFilter& keep_pair, const TripleFilter& keep) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.component = c.name();
  r.property = property;
  r.label = std::move(label);

  const auto methods = c.enum_methods(b);
  const double n = static_cast<double>(methods.size());
  b.require_within(n * n * n, "CP2 sweep of " + c.name());
  const auto states = c.enum_states(b);

  // it[i][j] = IT(m_i, m_j) over the enumerated methods.
  std::vector<std::vector<Method>> it(methods.size());
  for (std::size_t i = 0; i < methods.size(); ++i) {
    it[i].reserve(methods.size());
    for (std::size_t j = 0; j < methods.size(); ++j) it[i].push_back(transform(c, methods[i], methods[j]));
  }

  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = 0; j < methods.size(); ++j) {
      const auto& m1 = methods[i];
      const auto& m2 = methods[j];
      if (!keep_pair(m1, m2) || same_site(m1, m2)) continue;
      for (std::size_t k = 0; k < methods.size(); ++k) {
        ++r.examined;
        const auto& m3 = methods[k];
        if (!keep(m1, m2, m3)) continue;
        ++r.cases;
        Method left = transform(c, it[k][i], it[j][i]);
        Method right = transform(c, it[k][j], it[i][j]);
        if (left == right) continue;
        Witness w;
        w.kind = WitnessKind::kCp2;
        w.methods = {m1, m2, m3};
        w.left = std::move(left);
        w.right = std::move(right);
        w.state = realizing_state(c, states, m1, m2, m3);
        w.realizable = w.state.has_value();
        if (w.realizable || o.cp2 == Cp2Semantics::kLiteral) {
          r.witnesses.push_back(std::move(w));
        } else {
          r.unrealized.push_back(std::move(w));
        }
      }
    }
  }
  self_check(c, r, o, b);
  finish(r);
  r.elapsed_ms = ms_since(t0);
  return r;
}

void require_disjoint(const Component& c, const MethodClass& m1, const MethodClass& m2,
                      const Bounds& b) {
  for (const auto& m : c.enum_methods(b)) {
    if (m1.contains(m) && m2.contains(m)) {
      throw Error(ErrorCode::kNotDisjoint, to_string(m) + " is in both " + m1.name + " and " +
                                               m2.name);
    }
  }
}

std::string cross_label(const std::string& prop, const MethodClass& m1, const MethodClass& m2) {
  return prop + "[" + m1.name + " x " + m2.name + "]";
}

CheckReport aggregate(const Component& c, std::vector<CheckReport> parts, double elapsed_ms) {
  CheckReport r;
  r.component = c.name();
  r.property = Property::kConsistency;
  r.label = "consistency";
  bool any_fail = false;
  bool any_vacuous = false;
  for (const auto& p : parts) {
    r.cases += p.cases;
    r.examined += p.examined;
    r.witnesses.insert(r.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    r.unrealized.insert(r.unrealized.end(), p.unrealized.begin(), p.unrealized.end());
    any_fail = any_fail || p.verdict == Verdict::kFail;
    any_vacuous = any_vacuous || p.verdict == Verdict::kVacuous;
  }
  r.verdict = any_fail ? Verdict::kFail : any_vacuous ? Verdict::kVacuous : Verdict::kPass;
  r.parts = std::move(parts);
  r.elapsed_ms = elapsed_ms;
  return r;
}

}  // namespace

CheckReport check_cp1(const Component& c, const Bounds& b, const CheckOptions& o) {
  return sweep_cp1(c, b, o, Property::kCp1, "cp1", [](const Method&, const Method&) { return true; });
}

CheckReport check_cp2(const Component& c, const Bounds& b, const CheckOptions& o) {
  return sweep_cp2(
      c, b, o, Property::kCp2, "cp2", [](const Method&, const Method&) { return true; },
      [](const Method&, const Method&, const Method&) { return true; });
}

CheckReport check_cp1_within(const Component& c, const MethodClass& m, const Bounds& b,
                             const CheckOptions& o) {
  return sweep_cp1(c, b, o, Property::kCp1Restricted, "cp1[" + m.name + "]",
                   [&](const Method& a, const Method& x) { return m.contains(a) && m.contains(x); });
}

CheckReport check_cp2_within(const Component& c, const MethodClass& m, const Bounds& b,
                             const CheckOptions& o) {
  return sweep_cp2(
      c, b, o, Property::kCp2Restricted, "cp2[" + m.name + "]",
      [&](const Method& a, const Method& x) { return m.contains(a) && m.contains(x); },
      [&](const Method&, const Method&, const Method& z) { return m.contains(z); });
}

CheckReport check_cp1_restricted(const Component& c, const MethodClass& m1, const MethodClass& m2,
                                 const Bounds& b, const CheckOptions& o) {
  require_disjoint(c, m1, m2, b);
  return sweep_cp1(c, b, o, Property::kCp1Restricted, cross_label("cp1", m1, m2),
                   [&](const Method& a, const Method& x) {
                     return (m1.contains(a) && m2.contains(x)) || (m2.contains(a) && m1.contains(x));
                   });
}

CheckReport check_cp2_restricted(const Component& c, const MethodClass& m1, const MethodClass& m2,
                                 const Bounds& b, const CheckOptions& o) {
  require_disjoint(c, m1, m2, b);
  auto in = [&](const Method& m) { return m1.contains(m) || m2.contains(m); };
  return sweep_cp2(
      c, b, o, Property::kCp2Restricted, cross_label("cp2", m1, m2),
      [&](const Method& a, const Method& x) { return in(a) && in(x); },
      [&](const Method& a, const Method& x, const Method& z) {
        if (!in(z)) return false;
        const bool all1 = m1.contains(a) && m1.contains(x) && m1.contains(z);
        const bool all2 = m2.contains(a) && m2.contains(x) && m2.contains(z);
        return !all1 && !all2;
      });
}

CheckReport check_consistency(const Component& c, const Bounds& b, const CheckOptions& o) {
  const auto t0 = Clock::now();
  std::vector<CheckReport> parts;
  if (dynamic_cast<const DynamicComposition*>(&c) != nullptr) {
    const auto u = update_methods();
    const auto p = pattern_methods();
    parts.push_back(check_cp1_within(c, u, b, o));
    parts.push_back(check_cp1_within(c, p, b, o));
    parts.push_back(check_cp1_restricted(c, u, p, b, o));
    parts.push_back(check_cp2_within(c, u, b, o));
    parts.push_back(check_cp2_within(c, p, b, o));
    parts.push_back(check_cp2_restricted(c, u, p, b, o));
  } else {
    parts.push_back(check_cp1(c, b, o));
    parts.push_back(check_cp2(c, b, o));
  }
  return aggregate(c, std::move(parts), ms_since(t0));
}

CheckReport check_update_commutation(const Component& c, const Bounds& b) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.component = c.name();
  r.property = Property::kCommutation;
  r.label = "commutation[updates]";

  std::vector<std::pair<Method, UpdateMethod>> updates;
  for (const auto& m : c.enum_methods(b)) {
    if (auto u = UpdateMethod::from(m)) updates.emplace_back(m, *u);
  }
  const auto states = c.enum_states(b);
  const double n = static_cast<double>(updates.size());
  b.require_within(static_cast<double>(states.size()) * n * n, "commutation sweep of " + c.name());

  std::vector<std::size_t> on;
  for (const auto& s : states) {
    on.clear();
    for (std::size_t i = 0; i < updates.size(); ++i) {
      if (enabled(c, updates[i].first, s)) on.push_back(i);
    }
    r.examined += static_cast<std::int64_t>(updates.size() * updates.size());
    for (auto i : on) {
      for (auto j : on) {
        const auto& [m1, u1] = updates[i];
        const auto& [m2, u2] = updates[j];
        if (u1.same_target(u2)) continue;
        if (!legal(c, {m1, m2}, s) || !legal(c, {m2, m1}, s)) continue;
        ++r.cases;
        State f1 = apply_seq(c, {m1, m2}, s);
        State f2 = apply_seq(c, {m2, m1}, s);
        if (f1 != f2) {
          Witness w;
          w.kind = WitnessKind::kCommutation;
          w.state = s;
          w.methods = {m1, m2};
          w.left = std::move(f1);
          w.right = std::move(f2);
          r.witnesses.push_back(std::move(w));
        }
      }
    }
  }
  self_check(c, r, {}, b);
  finish(r);
  r.elapsed_ms = ms_since(t0);
  return r;
}

bool replay_witness(const Component& c, const Witness& w, const CheckOptions& o, const Bounds& b) {
  if (w.kind == WitnessKind::kCp2) {
    if (w.methods.size() != 3) return false;
    const auto& m1 = w.methods[0];
    const auto& m2 = w.methods[1];
    const auto& m3 = w.methods[2];
    const Method left = transform_seq(c, m3, {m1, transform(c, m2, m1)});
    const Method right = transform_seq(c, m3, {m2, transform(c, m1, m2)});
    if (left == right) return false;
    if (!std::holds_alternative<Method>(w.left) || !std::holds_alternative<Method>(w.right)) return false;
    if (std::get<Method>(w.left) != left || std::get<Method>(w.right) != right) return false;
    if (w.state) {
      for (const auto& m : w.methods) {
        if (!enabled(c, m, *w.state)) return false;
      }
      return legal(c, {m1, transform(c, m2, m1)}, *w.state) &&
             legal(c, {m2, transform(c, m1, m2)}, *w.state);
    }
    return !w.realizable;
  }

  if (!w.state || w.methods.size() != 2) return false;
  const auto& m1 = w.methods[0];
  const auto& m2 = w.methods[1];
  MethodSeq seq1;
  MethodSeq seq2;
  if (w.kind == WitnessKind::kCommutation) {
    seq1 = {m1, m2};
    seq2 = {m2, m1};
  } else {
    seq1 = {m1, transform(c, m2, m1)};
    seq2 = {m2, transform(c, m1, m2)};
  }
  if (!legal(c, seq1, *w.state) || !legal(c, seq2, *w.state)) return false;
  const State f1 = apply_seq(c, seq1, *w.state);
  const State f2 = apply_seq(c, seq2, *w.state);
  if (!std::holds_alternative<State>(w.left) || !std::holds_alternative<State>(w.right)) return false;
  if (std::get<State>(w.left) != f1 || std::get<State>(w.right) != f2) return false;
  if (w.kind == WitnessKind::kCommutation) return f1 != f2;
  return !states_equal(c, f1, f2, o, b);
}

// ---- serialization ----

namespace {

const char* kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::kCp1: return "cp1";
    case WitnessKind::kCp2: return "cp2";
    case WitnessKind::kCommutation: return "commutation";
  }
  return "?";
}

Json outcome_json(const Component& c, const Outcome& o) {
  if (const auto* s = std::get_if<State>(&o)) return c.encode_state(*s);
  return c.encode_method(std::get<Method>(o));
}

Method method_from_json(const Component& c, const Json& j) {
  std::optional<SiteId> site;
  if (j.is_object() && j.contains("site")) site = j["site"].get<SiteId>();
  return decode_method(c, j, site);
}

}  // namespace

Json to_json(const Component& c, const Witness& w) {
  Json j;
  j["kind"] = kind_name(w.kind);
  j["state"] = w.state ? c.encode_state(*w.state) : Json(nullptr);
  j["methods"] = Json::array();
  for (const auto& m : w.methods) j["methods"].push_back(c.encode_method(m));
  j["left"] = outcome_json(c, w.left);
  j["right"] = outcome_json(c, w.right);
  if (w.kind == WitnessKind::kCp2) j["realizable"] = w.realizable;
  return j;
}

Witness witness_from_json(const Component& c, const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("methods") || !j["methods"].is_array()) {
    throw Error(ErrorCode::kInvalidLiteral, "witness needs \"kind\" and \"methods\"");
  }
  Witness w;
  const auto kind = j["kind"].get<std::string>();
  if (kind == "cp1") {
    w.kind = WitnessKind::kCp1;
  } else if (kind == "cp2") {
    w.kind = WitnessKind::kCp2;
  } else if (kind == "commutation") {
    w.kind = WitnessKind::kCommutation;
  } else {
    throw Error(ErrorCode::kInvalidLiteral, "unknown witness kind " + kind);
  }
  if (j.contains("state") && !j["state"].is_null()) w.state = c.decode_state(j["state"]);
  for (const auto& m : j["methods"]) w.methods.push_back(method_from_json(c, m));
  if (w.kind == WitnessKind::kCp2) {
    w.left = method_from_json(c, j.at("left"));
    w.right = method_from_json(c, j.at("right"));
    w.realizable = j.value("realizable", true);
  } else {
    w.left = c.decode_state(j.at("left"));
    w.right = c.decode_state(j.at("right"));
  }
  return w;
}

Json to_json(const Component& c, const CheckReport& r, bool with_elapsed) {
  Json j;
  j["property"] = to_string(r.property);
  j["component"] = r.component;
  j["label"] = r.label;
  j["verdict"] = to_string(r.verdict);
  j["cases"] = r.cases;
  j["examined"] = r.examined;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(c, w));
  if (r.property == Property::kCp2 || r.property == Property::kCp2Restricted ||
      r.property == Property::kConsistency) {
    j["unrealized_witnesses"] = Json::array();
    for (const auto& w : r.unrealized) j["unrealized_witnesses"].push_back(to_json(c, w));
  }
  if (!r.parts.empty()) {
    j["parts"] = Json::array();
    for (const auto& p : r.parts) j["parts"].push_back(to_json(c, p, with_elapsed));
  }
  if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

namespace {

std::string outcome_text(const Outcome& o) {
  if (const auto* s = std::get_if<State>(&o)) return to_string(*s);
  return to_string(std::get<Method>(o));
}

void render(std::ostringstream& out, const CheckReport& r, const std::string& indent) {
  out << indent << r.label << " " << r.component << ": " << to_string(r.verdict) << " (" << r.cases
      << " cases, " << r.examined << " examined";
  if (!r.unrealized.empty()) out << ", " << r.unrealized.size() << " unrealized";
  out << ")\n";
  std::size_t shown = 0;
  for (const auto& w : r.witnesses) {
    if (++shown > 5) {
      out << indent << "  ... " << r.witnesses.size() - 5 << " more\n";
      break;
    }
    out << indent << "  witness";
    if (w.state) out << " at " << to_string(*w.state);
    out << ": " << to_string(w.methods) << " -> " << outcome_text(w.left) << " vs "
        << outcome_text(w.right) << "\n";
  }
  for (const auto& p : r.parts) render(out, p, indent + "  ");
}

}  // namespace

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  render(out, r, "");
  return out.str();
}

}  // namespace otcomp
