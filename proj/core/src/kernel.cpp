#include "otcomp/kernel.hpp"

#include <algorithm>

#include "otcomp/error.hpp"

namespace otcomp {

bool Component::declares_method(std::string_view ctor) const {
  return std::any_of(methods_.begin(), methods_.end(),
                     [&](const MethodSig& s) { return s.name == ctor; });
}

bool Component::declares_attribute(std::string_view name) const {
  return std::any_of(attributes_.begin(), attributes_.end(),
                     [&](const AttributeSig& s) { return s.name == name; });
}

Method decode_method(const Component& c, const Json& j, std::optional<SiteId> site) {
  if (!j.is_object() || !j.contains("ctor") || !j["ctor"].is_string()) {
    throw Error(ErrorCode::kInvalidLiteral, "method literal needs a string \"ctor\": " + j.dump());
  }
  const auto ctor = j["ctor"].get<std::string>();
  const Json args = j.contains("args") ? j["args"] : Json::array();
  if (!args.is_array()) throw Error(ErrorCode::kInvalidLiteral, "method \"args\" must be an array");
  if (ctor == "nop") {
    if (!args.empty()) throw Error(ErrorCode::kInvalidLiteral, "nop takes no arguments");
    return Method::nop();
  }
  if (!c.declares_method(ctor)) {
    throw Error(ErrorCode::kUnknownMethod, ctor + " is not a method of " + c.name());
  }
  return c.decode_method(ctor, args, site);
}

namespace {

void require_method(const Component& c, const Method& m) {
  if (!m.is_nop() && !c.declares_method(m.ctor())) {
    throw Error(ErrorCode::kUnknownMethod, m.ctor() + " is not a method of " + c.name());
  }
}

}  // namespace

State apply(const Component& c, const Method& m, const State& st) {
  require_method(c, m);
  if (m.is_nop()) return st;
  return c.do_method(m, st);
}

bool enabled(const Component& c, const Method& m, const State& st) {
  require_method(c, m);
  if (m.is_nop()) return true;
  return c.poss(m, st);
}

Method transform(const Component& c, const Method& m1, const Method& m2) {
  require_method(c, m1);
  require_method(c, m2);
  if (m1.is_nop()) return m1;
  if (m2.is_nop()) return m1;
  return c.it(m1, m2);
}

State apply_seq(const Component& c, const MethodSeq& seq, State st) {
  for (const auto& m : seq) st = apply(c, m, st);
  return st;
}

bool legal(const Component& c, const MethodSeq& seq, State st) {
  for (const auto& m : seq) {
    if (!enabled(c, m, st)) return false;
    st = apply(c, m, st);
  }
  return true;
}

Method transform_seq(const Component& c, Method m, const MethodSeq& seq) {
  for (const auto& other : seq) m = transform(c, m, other);
  return m;
}

Datum observe(const Component& c, std::string_view attr, const std::vector<Datum>& args,
              const State& st) {
  if (!c.declares_attribute(attr)) {
    throw Error(ErrorCode::kUnknownAttribute,
                std::string(attr) + " is not an attribute of " + c.name());
  }
  return c.attribute(std::string(attr), args, st);
}

Datum observe_defined(const Component& c, std::string_view attr, const std::vector<Datum>& args,
                      const State& st) {
  Datum d = observe(c, attr, args, st);
  if (d.is_bottom()) {
    throw Error(ErrorCode::kUndefinedObservation,
                std::string(attr) + " is not determined by " + to_string(st));
  }
  return d;
}

namespace {

bool same_observations(const Component& c, const std::vector<Observation>& obs, const State& s1,
                       const State& s2) {
  return std::all_of(obs.begin(), obs.end(), [&](const Observation& o) {
    return c.attribute(o.attribute, o.args, s1) == c.attribute(o.attribute, o.args, s2);
  });
}

bool contexts_agree(const Component& c, const std::vector<Observation>& obs,
                    const std::vector<Method>& methods, const State& s1, const State& s2,
                    int depth) {
  if (!same_observations(c, obs, s1, s2)) return false;
  if (depth == 0) return true;
  for (const auto& m : methods) {
    const bool e1 = enabled(c, m, s1);
    if (e1 != enabled(c, m, s2)) return false;
    if (e1 && !contexts_agree(c, obs, methods, apply(c, m, s1), apply(c, m, s2), depth - 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool obs_equal(const Component& c, const State& s1, const State& s2, int depth, const Bounds& b) {
  const auto obs = c.enum_observations(b);
  if (depth == 0) return same_observations(c, obs, s1, s2);
  const auto methods = c.enum_methods(b);
  return contexts_agree(c, obs, methods, s1, s2, depth);
}

}  // namespace otcomp
