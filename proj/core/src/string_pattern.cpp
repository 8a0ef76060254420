#include <cmath>

#include "literal.hpp"
#include "otcomp/error.hpp"
#include "otcomp/patterns.hpp"

namespace otcomp {
namespace {

// Sequences of elements edited by position. The issuing site lives in
// Method::site and only breaks ties between inserts at the same position.
class StringBody final : public PatternBody {
 public:
  StringBody(std::string name, Morphism phi) : PatternBody(std::move(name), std::move(phi)) {
    declare_method({"Ins", {"Nat", "Elem"}});
    declare_method({"Del", {"Nat"}});
    declare_attribute({"elemAt", {"Nat"}, "Elem"});
    declare_attribute({"length", {}, "Nat"});
    // An Update behaves like a Del of its position under shifting, and
    // never moves Ins or Del.
    cross_.update_vs_pattern = [](const UpdateMethod& u, const Method& m,
                                  const Component&) -> Method {
      const auto p = u.addr.at(0).as<Nat>().value;
      const auto p2 = pos(m);
      UpdateMethod out = u;
      if (m.ctor() == "Ins") {
        if (p >= p2) out.addr = {Nat{p + 1}};
      } else {
        if (p == p2) return Method::nop();
        if (p > p2) out.addr = {Nat{p - 1}};
      }
      return out.to_method();
    };
    cross_.pattern_vs_update = [](const Method& m, const UpdateMethod&,
                                  const Component&) -> Method { return m; };
  }

  static Method ins(std::int64_t p, State e, std::optional<SiteId> site) {
    return Method("Ins", {Nat{p}, std::move(e)}, site);
  }
  static Method del(std::int64_t p, std::optional<SiteId> site) {
    return Method("Del", {Nat{p}}, site);
  }

  State initial_state() const override { return State::seq({}); }

  State do_method(const Method& m, const State& st) const override {
    auto items = st.items();
    const auto p = static_cast<std::size_t>(pos(m));
    if (m.ctor() == "Ins") {
      items.insert(items.begin() + static_cast<std::ptrdiff_t>(p), m.args().at(1).as<State>());
    } else {
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return State::seq(std::move(items));
  }

  bool poss(const Method& m, const State& st) const override {
    const auto p = pos(m);
    const auto len = static_cast<std::int64_t>(st.items().size());
    if (m.ctor() == "Ins") return p >= 0 && p <= len;
    return p >= 0 && p < len;
  }

  Method it(const Method& m1, const Method& m2) const override {
    const auto p1 = pos(m1);
    const auto p2 = pos(m2);
    const bool ins1 = m1.ctor() == "Ins";
    const bool ins2 = m2.ctor() == "Ins";
    if (ins1 && ins2) {
      if (p1 < p2 || (p1 == p2 && site_of(m1) < site_of(m2))) return m1;
      return shift(m1, p1 + 1);
    }
    if (ins1) return p1 <= p2 ? m1 : shift(m1, p1 - 1);
    if (ins2) return p1 < p2 ? m1 : shift(m1, p1 + 1);
    if (p1 < p2) return m1;
    if (p1 > p2) return shift(m1, p1 - 1);
    return Method::nop();
  }

  Datum attribute(const std::string& name, const std::vector<Datum>& args,
                  const State& st) const override {
    const auto& items = st.items();
    if (name == "length") return Nat{static_cast<std::int64_t>(items.size())};
    const auto p = args.at(0).as<Nat>().value;
    if (p < 0 || p >= static_cast<std::int64_t>(items.size())) return Bottom{};
    return items[static_cast<std::size_t>(p)];
  }

  std::vector<Method> enum_methods(const Bounds& b) const override {
    const auto es = elements(b);
    const auto sites = b.site_ids();
    const double count = static_cast<double>(sites.size()) *
                         ((b.max_len + 1.0) * static_cast<double>(es.size()) + b.max_len);
    if (count + 1 > static_cast<double>(b.max_methods)) {
      throw Error(ErrorCode::kBoundsExceeded, name() + ": too many methods");
    }
    std::vector<Method> out{Method::nop()};
    for (std::int64_t p = 0; p <= b.max_len; ++p) {
      for (const auto& e : es) {
        for (auto n : sites) out.push_back(ins(p, e, n));
      }
    }
    for (std::int64_t p = 0; p < b.max_len; ++p) {
      for (auto n : sites) out.push_back(del(p, n));
    }
    return out;
  }

  std::vector<State> enum_states(const Bounds& b) const override {
    const auto es = elements(b);
    double total = 0;
    for (int n = 0; n <= b.max_len; ++n) total += std::pow(static_cast<double>(es.size()), n);
    b.require_within(total, name() + " states");
    std::vector<State> out;
    std::vector<std::vector<State>> layer{{}};
    out.push_back(State::seq({}));
    for (int n = 1; n <= b.max_len; ++n) {
      std::vector<std::vector<State>> next;
      for (const auto& prefix : layer) {
        for (const auto& e : es) {
          auto items = prefix;
          items.push_back(e);
          out.push_back(State::seq(items));
          next.push_back(std::move(items));
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  std::vector<Observation> enum_observations(const Bounds& b) const override {
    std::vector<Observation> out{{"length", {}}};
    for (std::int64_t p = 0; p <= b.max_len; ++p) out.push_back({"elemAt", {Nat{p}}});
    return out;
  }

  Json encode_state(const State& st) const override {
    if (chars_only()) {
      std::string text;
      for (const auto& e : st.items()) text += e.value().as<Char>().value;
      return text;
    }
    Json j = Json::array();
    for (const auto& e : st.items()) j.push_back(element().encode_state(e));
    return j;
  }

  State decode_state(const Json& j) const override {
    std::vector<State> items;
    if (j.is_string() && chars_only()) {
      for (char c : j.get<std::string>()) items.push_back(element().decode_state(std::string(1, c)));
    } else if (j.is_array()) {
      for (const auto& e : j) items.push_back(element().decode_state(e));
    } else {
      detail::bad_literal(name() + " state must be an array of elements", j);
    }
    return State::seq(std::move(items));
  }

  Json encode_method(const Method& m) const override {
    Json j;
    j["ctor"] = m.ctor();
    j["args"] = Json::array();
    if (!m.is_nop()) {
      j["args"].push_back(pos(m));
      if (m.ctor() == "Ins") j["args"].push_back(element().encode_state(m.args().at(1).as<State>()));
    }
    if (m.site()) j["site"] = *m.site();
    return j;
  }

  Method decode_method(const std::string& ctor, const Json& args,
                       std::optional<SiteId> site) const override {
    if (ctor == "Ins") {
      detail::require_arity(ctor, args, 2);
      return ins(detail::decode_nat(args[0]).value, element().decode_state(args[1]), site);
    }
    detail::require_arity(ctor, args, 1);
    return del(detail::decode_nat(args[0]).value, site);
  }

  std::vector<std::vector<Datum>> update_addresses(const Bounds& b) const override {
    std::vector<std::vector<Datum>> out;
    for (std::int64_t p = 0; p < b.max_len; ++p) out.push_back({Nat{p}});
    return out;
  }

  bool update_target_enabled(const std::vector<Datum>& addr, const State& old_child, const State&,
                             const State& st) const override {
    const auto p = addr.at(0).as<Nat>().value;
    const auto& items = st.items();
    return p >= 0 && p < static_cast<std::int64_t>(items.size()) &&
           morphism().eq(items[static_cast<std::size_t>(p)], old_child);
  }

  State replace_element(const std::vector<Datum>& addr, const State&, const State& new_child,
                        const State& st) const override {
    auto items = st.items();
    items.at(static_cast<std::size_t>(addr.at(0).as<Nat>().value)) = new_child;
    return State::seq(std::move(items));
  }

  const CrossTable* cross_table() const override { return &cross_; }

  Json encode_address(const std::vector<Datum>& addr) const override {
    return Json::array({addr.at(0).as<Nat>().value});
  }
  std::vector<Datum> decode_address(const Json& args, std::size_t) const override {
    return {detail::decode_nat(args.at(0))};
  }
  std::size_t address_arity() const override { return 1; }

 private:
  static std::int64_t pos(const Method& m) { return m.args().at(0).as<Nat>().value; }
  static SiteId site_of(const Method& m) { return m.site().value_or(0); }
  static Method shift(const Method& m, std::int64_t p) {
    auto args = m.args();
    args[0] = Nat{p};
    return m.with_args(std::move(args));
  }

  bool chars_only() const { return &element() == char_atoms().get(); }

  CrossTable cross_;
};

}  // namespace

CompositionPattern string_pattern() {
  CompositionPattern p;
  p.name = "string";
  p.formal_param_axioms = equality_axioms();
  p.parametric_methods = {"Ins"};
  p.parametric_attributes = {"elemAt"};
  p.make_body = [](const Morphism& phi, std::string name) {
    return std::make_shared<const StringBody>(std::move(name), phi);
  };
  return p;
}

}  // namespace otcomp
