#include "otcomp/patterns.hpp"

#include <algorithm>

#include "literal.hpp"
#include "otcomp/error.hpp"

namespace otcomp {

Morphism Morphism::structural(ComponentPtr target) {
  return Morphism{std::move(target), [](const State& a, const State& b) { return a == b; }};
}

void CompositionPattern::validate() const {
  if (parametric_methods.empty() || parametric_attributes.empty()) {
    throw Error(ErrorCode::kInvalidSpec,
                name + " needs a parametric method and a parametric attribute");
  }
  if (!make_body) throw Error(ErrorCode::kInvalidSpec, name + " has no body");
}

std::vector<ParamAxiom> equality_axioms() {
  ParamAxiom symmetry{
      "eq(x,y)=eq(y,x)",
      [](const EqMatrix& eq, std::size_t& checked) -> std::optional<std::vector<std::size_t>> {
        for (std::size_t i = 0; i < eq.size(); ++i) {
          for (std::size_t j = 0; j < eq.size(); ++j) {
            ++checked;
            if (eq[i][j] != eq[j][i]) return std::vector<std::size_t>{i, j};
          }
        }
        return std::nullopt;
      }};
  ParamAxiom transitivity{
      "eq(x,y)=true, eq(y,z)=true => eq(x,z)=true",
      [](const EqMatrix& eq, std::size_t& checked) -> std::optional<std::vector<std::size_t>> {
        // Only triples whose premises hold can violate the law.
        for (std::size_t i = 0; i < eq.size(); ++i) {
          for (std::size_t j = 0; j < eq.size(); ++j) {
            if (!eq[i][j]) continue;
            for (std::size_t k = 0; k < eq.size(); ++k) {
              if (!eq[j][k]) continue;
              ++checked;
              if (!eq[i][k]) return std::vector<std::size_t>{i, j, k};
            }
          }
        }
        return std::nullopt;
      }};
  return {std::move(symmetry), std::move(transitivity)};
}

AdmissibilityReport check_admissible(const CompositionPattern& p, const Component& c,
                                     const Morphism& phi, const Bounds& b) {
  const auto states = c.enum_states(b);
  if (states.size() < 2) {
    throw Error(ErrorCode::kBoundsTooSmall, c.name() + " enumerates " +
                                                std::to_string(states.size()) +
                                                " state(s); admissibility would be vacuous");
  }
  const double n = static_cast<double>(states.size());
  b.require_within(n * n, "admissibility of " + c.name());

  EqMatrix eq(states.size(), std::vector<char>(states.size(), 0));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) eq[i][j] = phi.eq(states[i], states[j]) ? 1 : 0;
  }

  AdmissibilityReport report;
  report.states = states.size();
  for (const auto& axiom : p.formal_param_axioms) {
    if (auto bad = axiom.find_violation(eq, report.checked)) {
      report.failed_axiom = axiom.name;
      for (auto idx : *bad) report.witness.push_back(states[idx]);
      return report;
    }
  }
  report.passed = true;
  return report;
}

std::shared_ptr<const PatternBody> instantiate(const CompositionPattern& p, const Morphism& phi,
                                               const Bounds& b, AdmissibilityReport* out) {
  p.validate();
  const auto report = check_admissible(p, *phi.elem_target, phi, b);
  if (out) *out = report;
  if (!report.passed) {
    std::string w;
    for (const auto& s : report.witness) w += (w.empty() ? "" : ", ") + to_string(s);
    throw Error(ErrorCode::kNotAdmissible, phi.elem_target->name() + " for " + p.name +
                                               ": " + report.failed_axiom + " fails at (" + w +
                                               ")");
  }
  return p.make_body(phi, p.name + "{" + phi.elem_target->name() + "}");
}

namespace {

enum class AtomKind { kSymbol, kChar };

class AtomComponent final : public Component {
 public:
  explicit AtomComponent(AtomKind kind)
      : Component(kind == AtomKind::kSymbol ? "atom" : "char"), kind_(kind) {
    declare_attribute({"value", {}, kind == AtomKind::kSymbol ? "Symbol" : "Char"});
  }

  State initial_state() const override {
    return kind_ == AtomKind::kSymbol ? State::opaque(Symbol{"x"}) : State::opaque(Char{'a'});
  }
  State do_method(const Method& m, const State&) const override { throw unknown(m); }
  bool poss(const Method& m, const State&) const override { throw unknown(m); }
  Method it(const Method& m, const Method&) const override { throw unknown(m); }
  Datum attribute(const std::string&, const std::vector<Datum>&, const State& st) const override {
    return st.value();
  }
  std::vector<Method> enum_methods(const Bounds&) const override { return {Method::nop()}; }
  std::vector<State> enum_states(const Bounds& b) const override {
    std::vector<State> out;
    if (kind_ == AtomKind::kSymbol) {
      for (auto& s : b.atoms()) out.push_back(State::opaque(std::move(s)));
    } else {
      for (char c : b.chars()) out.push_back(State::opaque(Char{c}));
    }
    return out;
  }
  std::vector<Observation> enum_observations(const Bounds&) const override {
    return {Observation{"value", {}}};
  }
  Json encode_state(const State& st) const override { return detail::encode_scalar(st.value()); }
  State decode_state(const Json& j) const override {
    if (kind_ == AtomKind::kSymbol) return State::opaque(detail::decode_symbol(j));
    return State::opaque(detail::decode_char(j));
  }
  Json encode_method(const Method& m) const override { throw unknown(m); }
  Method decode_method(const std::string& ctor, const Json&,
                       std::optional<SiteId>) const override {
    throw Error(ErrorCode::kUnknownMethod, ctor + " is not a method of " + name());
  }

 private:
  Error unknown(const Method& m) const {
    return Error(ErrorCode::kUnknownMethod, m.ctor() + " is not a method of " + name());
  }
  AtomKind kind_;
};

}  // namespace

ComponentPtr symbol_atoms() {
  static const ComponentPtr kAtoms = std::make_shared<const AtomComponent>(AtomKind::kSymbol);
  return kAtoms;
}

ComponentPtr char_atoms() {
  static const ComponentPtr kAtoms = std::make_shared<const AtomComponent>(AtomKind::kChar);
  return kAtoms;
}

std::shared_ptr<const PatternBody> bare_set(SetVariant variant) {
  static const auto kLiteral =
      set_pattern(SetVariant::kLiteral).make_body(Morphism::structural(symbol_atoms()), "set-literal");
  static const auto kGuarded =
      set_pattern(SetVariant::kGuarded).make_body(Morphism::structural(symbol_atoms()), "set-guarded");
  return variant == SetVariant::kLiteral ? kLiteral : kGuarded;
}

std::shared_ptr<const PatternBody> bare_string() {
  static const auto kString =
      string_pattern().make_body(Morphism::structural(char_atoms()), "string");
  return kString;
}

State make_text(std::string_view text) {
  std::vector<State> items;
  for (char c : text) items.push_back(State::opaque(Char{c}));
  return State::seq(std::move(items));
}

}  // namespace otcomp
