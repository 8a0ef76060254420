#include "otcomp/primitives.hpp"

#include <algorithm>

#include "literal.hpp"
#include "otcomp/error.hpp"

namespace otcomp {

CellComponent::CellComponent(CellComponentSpec spec)
    : Component(spec.name), spec_(std::move(spec)) {
  declare_method({spec_.put_name, {spec_.value_sort}});
  declare_attribute({spec_.get_name, {}, spec_.value_sort});
}

State CellComponent::initial_state() const { return State::cell(Bottom{}); }

State CellComponent::do_method(const Method& m, const State&) const {
  return State::cell(m.args().at(0));
}

bool CellComponent::poss(const Method&, const State&) const { return true; }

Method CellComponent::it(const Method& m1, const Method& m2) const {
  return put(spec_.merge(m1.args().at(0), m2.args().at(0)));
}

Datum CellComponent::attribute(const std::string&, const std::vector<Datum>&,
                               const State& st) const {
  return st.value();
}

std::vector<Method> CellComponent::enum_methods(const Bounds& b) const {
  std::vector<Method> out{Method::nop()};
  for (auto& v : spec_.domain(b)) out.push_back(put(std::move(v)));
  return out;
}

std::vector<State> CellComponent::enum_states(const Bounds& b) const {
  std::vector<State> out{initial_state()};
  for (auto& v : spec_.domain(b)) out.push_back(State::cell(std::move(v)));
  return out;
}

std::vector<Observation> CellComponent::enum_observations(const Bounds&) const {
  return {Observation{spec_.get_name, {}}};
}

Json CellComponent::encode_state(const State& st) const {
  if (st.value().is_bottom()) return nullptr;
  return spec_.encode_value(st.value());
}

State CellComponent::decode_state(const Json& j) const {
  if (j.is_null()) return initial_state();
  return State::cell(spec_.decode_value(j));
}

Json CellComponent::encode_method(const Method& m) const {
  Json j;
  j["ctor"] = m.ctor();
  j["args"] = Json::array();
  if (!m.is_nop()) j["args"].push_back(spec_.encode_value(m.args().at(0)));
  return j;
}

Method CellComponent::decode_method(const std::string& ctor, const Json& args,
                                    std::optional<SiteId>) const {
  detail::require_arity(ctor, args, 1);
  return put(spec_.decode_value(args[0]));
}

std::shared_ptr<const CellComponent> make_cell_component(CellComponentSpec spec,
                                                         const Bounds& law_bounds) {
  const auto dom = spec.domain(law_bounds);
  auto fail = [&](const std::string& law, const std::string& values) {
    throw Error(ErrorCode::kInvalidSpec, spec.name + ": merge is not " + law + " at " + values);
  };
  for (const auto& a : dom) {
    if (spec.merge(a, a) != a) fail("idempotent", to_string(a));
    for (const auto& b : dom) {
      if (spec.merge(a, b) != spec.merge(b, a)) fail("commutative", to_string(a) + ", " + to_string(b));
      for (const auto& c : dom) {
        if (spec.merge(spec.merge(a, b), c) != spec.merge(a, spec.merge(b, c))) {
          fail("associative", to_string(a) + ", " + to_string(b) + ", " + to_string(c));
        }
      }
    }
  }
  return std::make_shared<const CellComponent>(std::move(spec));
}

Datum maxchar(const Datum& a, const Datum& b) { return std::max(a.as<Char>(), b.as<Char>()); }
Datum minnat(const Datum& a, const Datum& b) { return std::min(a.as<Nat>(), b.as<Nat>()); }

Datum mincolor(const Datum& a, const Datum& b) {
  return static_cast<int>(a.as<Color>()) <= static_cast<int>(b.as<Color>()) ? a : b;
}

CellComponentSpec cchar_spec() {
  return {
      .name = "cchar",
      .value_sort = "Char",
      .put_name = "putchar",
      .get_name = "getchar",
      .merge = maxchar,
      .domain =
          [](const Bounds& b) {
            std::vector<Datum> out;
            for (char c : b.chars()) out.emplace_back(Char{c});
            return out;
          },
      .encode_value = detail::encode_scalar,
      .decode_value = [](const Json& j) -> Datum { return detail::decode_char(j); },
  };
}

CellComponentSpec cnat_spec() {
  return {
      .name = "cnat",
      .value_sort = "Nat",
      .put_name = "putnat",
      .get_name = "getnat",
      .merge = minnat,
      .domain =
          [](const Bounds& b) {
            std::vector<Datum> out;
            for (auto n : b.nats()) out.emplace_back(Nat{n});
            return out;
          },
      .encode_value = detail::encode_scalar,
      .decode_value = [](const Json& j) -> Datum { return detail::decode_nat(j); },
  };
}

CellComponentSpec ccolor_spec() {
  return {
      .name = "ccolor",
      .value_sort = "Color",
      .put_name = "putcolor",
      .get_name = "getcolor",
      .merge = mincolor,
      .domain =
          [](const Bounds& b) {
            std::vector<Datum> out;
            for (auto c : b.color_values()) out.emplace_back(c);
            return out;
          },
      .encode_value = detail::encode_scalar,
      .decode_value = [](const Json& j) -> Datum { return detail::decode_color(j); },
  };
}

std::shared_ptr<const CellComponent> cchar() {
  static const auto kCell = make_cell_component(cchar_spec());
  return kCell;
}

std::shared_ptr<const CellComponent> cnat() {
  static const auto kCell = make_cell_component(cnat_spec());
  return kCell;
}

std::shared_ptr<const CellComponent> ccolor() {
  static const auto kCell = make_cell_component(ccolor_spec());
  return kCell;
}

}  // namespace otcomp
