#pragma once

#include <memory>
#include <string>
#include <vector>

#include "otcomp/component.hpp"
#include "otcomp/patterns.hpp"
#include "otcomp/update.hpp"

namespace otcomp {

enum class NamePolicy {
  kQualify,          // clashing constructors become "f<index>.<ctor>"
  kRequireDisjoint,  // clashes throw Error(kNameClash)
};

/// Non-interacting product a (+) b (+) ... . Nested products are flattened,
/// so the state is always Product[factor states...] over leaf factors.
/// Do and Poss act on the owning factor, IT within a factor delegates to
/// it, and IT across factors is the identity.
class StaticProduct final : public Component {
 public:
  StaticProduct(std::vector<ComponentPtr> factors, NamePolicy policy);

  const std::vector<ComponentPtr>& factors() const noexcept { return factors_; }
  /// Factor index owning a method or attribute name, or -1.
  int method_owner(const std::string& ctor) const;
  int attribute_owner(const std::string& name) const;

  /// A factor method lifted into the product.
  Method lift(std::size_t factor, const Method& m) const;
  /// The factor's own view of a product method.
  Method lower(const Method& m) const;

  State initial_state() const override;
  State do_method(const Method& m, const State& st) const override;
  bool poss(const Method& m, const State& st) const override;
  Method it(const Method& m1, const Method& m2) const override;
  Datum attribute(const std::string& name, const std::vector<Datum>& args,
                  const State& st) const override;
  std::vector<Method> enum_methods(const Bounds& b) const override;
  std::vector<State> enum_states(const Bounds& b) const override;
  std::vector<Observation> enum_observations(const Bounds& b) const override;
  Json encode_state(const State& st) const override;
  State decode_state(const Json& j) const override;
  Json encode_method(const Method& m) const override;
  Method decode_method(const std::string& ctor, const Json& args,
                       std::optional<SiteId> site) const override;

 private:
  struct Name {
    std::size_t factor;
    std::string inner;
  };
  const Name& owner_of(const std::string& ctor) const;

  std::vector<ComponentPtr> factors_;
  std::vector<std::pair<std::string, Name>> method_names_;
  std::vector<std::pair<std::string, Name>> attribute_names_;
};

ComponentPtr static_compose(ComponentPtr c1, ComponentPtr c2,
                            NamePolicy policy = NamePolicy::kQualify);
ComponentPtr static_compose(std::vector<ComponentPtr> factors,
                            NamePolicy policy = NamePolicy::kQualify);

/// pattern[child]: the pattern body instantiated over the child's states,
/// extended with Update methods that edit one child occurrence in place.
class DynamicComposition final : public Component {
 public:
  DynamicComposition(std::string name, std::shared_ptr<const PatternBody> body, ComponentPtr child);

  const PatternBody& body() const noexcept { return *body_; }
  const Component& child() const noexcept { return *child_; }
  ComponentPtr child_ptr() const noexcept { return child_; }

  Method make_update(std::vector<Datum> addr, State old_child, Method child_method,
                     std::optional<SiteId> site = std::nullopt) const;

  State initial_state() const override;
  State do_method(const Method& m, const State& st) const override;
  bool poss(const Method& m, const State& st) const override;
  Method it(const Method& m1, const Method& m2) const override;
  Datum attribute(const std::string& name, const std::vector<Datum>& args,
                  const State& st) const override;
  /// Body methods, then Update over every address, enumerated old child and
  /// child method (nop included).
  std::vector<Method> enum_methods(const Bounds& b) const override;
  std::vector<State> enum_states(const Bounds& b) const override;
  std::vector<Observation> enum_observations(const Bounds& b) const override;
  Json encode_state(const State& st) const override;
  State decode_state(const Json& j) const override;
  Json encode_method(const Method& m) const override;
  Method decode_method(const std::string& ctor, const Json& args,
                       std::optional<SiteId> site) const override;

 private:
  UpdateMethod require_update(const Method& m) const;

  std::shared_ptr<const PatternBody> body_;
  ComponentPtr child_;
};

/// Checks admissibility of the child at `b` (throws Error(kNotAdmissible))
/// and builds "<pattern>[<child>]".
std::shared_ptr<const DynamicComposition> dynamic_compose(const CompositionPattern& p,
                                                          ComponentPtr child, const Morphism& phi,
                                                          const Bounds& b = {},
                                                          AdmissibilityReport* report = nullptr);
std::shared_ptr<const DynamicComposition> dynamic_compose(const CompositionPattern& p,
                                                          ComponentPtr child,
                                                          const Bounds& b = {},
                                                          AdmissibilityReport* report = nullptr);

/// Same target: Update(U, Do(m2, x), IT_child(m1, m2)). Otherwise u1.
/// Throws Error(kComponentMismatch) unless comp is a dynamic composition
/// whose child declares both child methods.
Method transform_update(const Component& comp, const UpdateMethod& u1, const UpdateMethod& u2);
/// IT(u, m) and IT(m, u) from the pattern's cross table. Throws
/// Error(kMissingCrossTable) when the pattern has none.
Method transform_update_vs_pattern(const Component& comp, const UpdateMethod& u, const Method& m);
Method transform_pattern_vs_update(const Component& comp, const Method& m, const UpdateMethod& u);

}  // namespace otcomp
