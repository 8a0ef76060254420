#include <algorithm>
#include <cmath>

#include "literal.hpp"
#include "otcomp/error.hpp"
#include "otcomp/kernel.hpp"
#include "otcomp/patterns.hpp"

namespace otcomp {
namespace {

// Finite sets of elements. States are canonical sets of element states;
// membership and the IT guards go through the morphism's eq.
class SetBody final : public PatternBody {
 public:
  SetBody(std::string name, Morphism phi, SetVariant variant)
      : PatternBody(std::move(name), std::move(phi)), variant_(variant) {
    declare_method({"add", {"Elem"}});
    declare_method({"remove", {"Elem"}});
    declare_attribute({"iselem", {"Elem"}, "Bool"});
    cross_.update_vs_pattern = [this](const UpdateMethod& u, const Method& m,
                                      const Component&) -> Method {
      if (m.ctor() == "remove" && eq(elem(m), u.old_child)) return Method::nop();
      return u.to_method();
    };
    cross_.pattern_vs_update = [this](const Method& m, const UpdateMethod& u,
                                      const Component& child) -> Method {
      if (m.ctor() == "remove" && eq(elem(m), u.old_child)) return remove(u.new_child(child));
      return m;
    };
  }

  Method add(State e) const { return Method("add", {std::move(e)}); }
  Method remove(State e) const { return Method("remove", {std::move(e)}); }

  State initial_state() const override { return State::set({}); }

  State do_method(const Method& m, const State& st) const override {
    if (m.ctor() == "add") return insert(st, elem(m));
    return erase(st, elem(m));
  }

  bool poss(const Method& m, const State& st) const override {
    if (m.ctor() == "add") return variant_ == SetVariant::kLiteral || !iselem(elem(m), st);
    return iselem(elem(m), st);
  }

  Method it(const Method& m1, const Method& m2) const override {
    // Same-constructor pairs on equal elements collapse to nop; every other
    // pair leaves m1 untouched.
    if (m1.ctor() == m2.ctor() && eq(elem(m1), elem(m2))) return Method::nop();
    return m1;
  }

  Datum attribute(const std::string&, const std::vector<Datum>& args,
                  const State& st) const override {
    return iselem(args.at(0).as<State>(), st);
  }

  std::vector<Method> enum_methods(const Bounds& b) const override {
    const auto es = elements(b);
    if (static_cast<std::int64_t>(2 * es.size() + 1) > b.max_methods) {
      throw Error(ErrorCode::kBoundsExceeded, name() + ": too many methods");
    }
    std::vector<Method> out{Method::nop()};
    for (const auto& e : es) out.push_back(add(e));
    for (const auto& e : es) out.push_back(remove(e));
    return out;
  }

  std::vector<State> enum_states(const Bounds& b) const override {
    const auto es = elements(b);
    b.require_within(std::pow(2.0, static_cast<double>(es.size())), name() + " states");
    std::vector<State> out;
    const std::size_t count = std::size_t{1} << es.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<State> items;
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (mask & (std::size_t{1} << i)) items.push_back(es[i]);
      }
      out.push_back(State::set(std::move(items)));
    }
    return out;
  }

  std::vector<Observation> enum_observations(const Bounds& b) const override {
    std::vector<Observation> out;
    for (auto& e : elements(b)) out.push_back({"iselem", {std::move(e)}});
    return out;
  }

  Json encode_state(const State& st) const override {
    Json j = Json::array();
    for (const auto& e : st.items()) j.push_back(element().encode_state(e));
    return j;
  }

  State decode_state(const Json& j) const override {
    if (!j.is_array()) detail::bad_literal(name() + " state must be an array of elements", j);
    std::vector<State> items;
    for (const auto& e : j) items.push_back(element().decode_state(e));
    return State::set(std::move(items));
  }

  Json encode_method(const Method& m) const override {
    Json j;
    j["ctor"] = m.ctor();
    j["args"] = Json::array();
    if (!m.is_nop()) j["args"].push_back(element().encode_state(elem(m)));
    return j;
  }

  Method decode_method(const std::string& ctor, const Json& args,
                       std::optional<SiteId>) const override {
    detail::require_arity(ctor, args, 1);
    return Method(ctor, {element().decode_state(args[0])});
  }

  std::vector<std::vector<Datum>> update_addresses(const Bounds&) const override { return {{}}; }

  bool update_target_enabled(const std::vector<Datum>&, const State& old_child,
                             const State& new_child, const State& st) const override {
    if (!iselem(old_child, st)) return false;
    // The guarded variant never lets an Update merge into another element.
    return variant_ == SetVariant::kLiteral || eq(new_child, old_child) || !iselem(new_child, st);
  }

  State replace_element(const std::vector<Datum>&, const State& old_child, const State& new_child,
                        const State& st) const override {
    return insert(erase(st, old_child), new_child);
  }

  const CrossTable* cross_table() const override { return &cross_; }

  Json encode_address(const std::vector<Datum>&) const override { return Json::array(); }
  std::vector<Datum> decode_address(const Json&, std::size_t) const override { return {}; }
  std::size_t address_arity() const override { return 0; }

 private:
  static const State& elem(const Method& m) { return m.args().at(0).as<State>(); }

  bool eq(const State& a, const State& b) const { return morphism().eq(a, b); }

  bool iselem(const State& x, const State& st) const {
    const auto& xs = st.items();
    return std::any_of(xs.begin(), xs.end(), [&](const State& e) { return eq(x, e); });
  }

  State insert(const State& st, const State& x) const {
    if (iselem(x, st)) return st;
    auto items = st.items();
    items.push_back(x);
    return State::set(std::move(items));
  }

  State erase(const State& st, const State& x) const {
    std::vector<State> items;
    for (const auto& e : st.items()) {
      if (!eq(x, e)) items.push_back(e);
    }
    return State::set(std::move(items));
  }

  SetVariant variant_;
  CrossTable cross_;
};

}  // namespace

CompositionPattern set_pattern(SetVariant variant) {
  CompositionPattern p;
  p.name = variant == SetVariant::kLiteral ? "set-literal" : "set-guarded";
  p.formal_param_axioms = equality_axioms();
  p.parametric_methods = {"add", "remove"};
  p.parametric_attributes = {"iselem"};
  p.make_body = [variant](const Morphism& phi, std::string name) {
    return std::make_shared<const SetBody>(std::move(name), phi, variant);
  };
  return p;
}

}  // namespace otcomp
