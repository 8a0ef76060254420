#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "otcomp/component.hpp"
#include "otcomp/update.hpp"

namespace otcomp {

using EqFn = std::function<bool(const State&, const State&)>;

/// Interpretation of the formal parameter: Elem is mapped to the states of
/// `elem_target`, and eq to `eq` (structural equality unless overridden).
struct Morphism {
  ComponentPtr elem_target;
  EqFn eq;

  static Morphism structural(ComponentPtr target);
};

/// eq evaluated over an enumerated element list: matrix[i][j] = eq(e_i, e_j).
using EqMatrix = std::vector<std::vector<char>>;

/// A law over the formal parameter. `find_violation` returns the indices of
/// a violating tuple, or nullopt, and adds the number of tuples it examined
/// to `checked`.
struct ParamAxiom {
  std::string name;
  std::function<std::optional<std::vector<std::size_t>>(const EqMatrix&, std::size_t& checked)>
      find_violation;
};

/// Transformations between Update methods and the pattern's own methods.
struct CrossTable {
  std::function<Method(const UpdateMethod& u, const Method& m, const Component& child)>
      update_vs_pattern;
  std::function<Method(const Method& m, const UpdateMethod& u, const Component& child)>
      pattern_vs_update;
};

/// Body of a composition pattern, already bound to an element interpretation.
/// Besides the ordinary component hooks it tells a dynamic composition how
/// Update methods address, replace and commute with elements.
class PatternBody : public Component {
 public:
  PatternBody(std::string name, Morphism phi) : Component(std::move(name)), phi_(std::move(phi)) {}

  const Morphism& morphism() const noexcept { return phi_; }
  const Component& element() const noexcept { return *phi_.elem_target; }
  std::vector<State> elements(const Bounds& b) const { return phi_.elem_target->enum_states(b); }

  virtual std::vector<std::vector<Datum>> update_addresses(const Bounds& b) const = 0;
  /// Whether an Update replacing old_child by new_child at `addr` may fire on
  /// `st`, apart from the child's own Poss.
  virtual bool update_target_enabled(const std::vector<Datum>& addr, const State& old_child,
                                     const State& new_child, const State& st) const = 0;
  virtual State replace_element(const std::vector<Datum>& addr, const State& old_child,
                                const State& new_child, const State& st) const = 0;
  /// nullptr when the pattern does not supply one.
  virtual const CrossTable* cross_table() const = 0;

  virtual Json encode_address(const std::vector<Datum>& addr) const = 0;
  virtual std::vector<Datum> decode_address(const Json& args, std::size_t count) const = 0;
  /// Number of leading Update arguments that form the address.
  virtual std::size_t address_arity() const = 0;

 private:
  Morphism phi_;
};

/// A parametric component: formal parameter laws plus a body factory.
struct CompositionPattern {
  std::string name;
  std::vector<ParamAxiom> formal_param_axioms;
  std::vector<std::string> parametric_methods;
  std::vector<std::string> parametric_attributes;
  std::function<std::shared_ptr<const PatternBody>(const Morphism&, std::string name)> make_body;

  /// Throws Error(kInvalidSpec) unless a parametric method and a parametric
  /// attribute are declared.
  void validate() const;
};

enum class SetVariant {
  kLiteral,  // Poss(add(x), st) = true
  kGuarded,  // Poss(add(x), st) = not iselem(x, st)
};

CompositionPattern set_pattern(SetVariant variant);
CompositionPattern string_pattern();

/// eq symmetry and eq transitivity.
std::vector<ParamAxiom> equality_axioms();

struct AdmissibilityReport {
  bool passed = false;
  std::size_t states = 0;
  std::size_t checked = 0;
  std::string failed_axiom;
  std::vector<State> witness;
};

/// Sweeps every formal-parameter axiom under phi over c.enum_states(b).
/// Throws Error(kBoundsTooSmall) when fewer than two states are enumerated.
AdmissibilityReport check_admissible(const CompositionPattern& p, const Component& c,
                                     const Morphism& phi, const Bounds& b = {});

/// The pattern body over phi's elements. Checks admissibility at `b` first
/// and throws Error(kNotAdmissible) with the witness when it fails; the
/// admissibility report is copied to `report` when given.
std::shared_ptr<const PatternBody> instantiate(const CompositionPattern& p, const Morphism& phi,
                                               const Bounds& b = {},
                                               AdmissibilityReport* report = nullptr);

/// Element components with no methods of their own, used for the bare
/// registry components: symbol atoms x, y, ... sized by Bounds::universe and
/// character atoms sized by Bounds::alphabet (states are Opaque).
ComponentPtr symbol_atoms();
ComponentPtr char_atoms();

/// "set-literal", "set-guarded" and "string" as standalone components.
std::shared_ptr<const PatternBody> bare_set(SetVariant variant);
std::shared_ptr<const PatternBody> bare_string();

/// Builds a bare-string state from text.
State make_text(std::string_view text);

}  // namespace otcomp
