#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "otcomp/component.hpp"

namespace otcomp {

enum class Property { kCp1, kCp2, kCp1Restricted, kCp2Restricted, kConsistency, kCommutation };
enum class Verdict { kPass, kFail, kVacuous };

std::string to_string(Property p);
std::string to_string(Verdict v);

enum class Cp2Semantics {
  // A discrepancy between the two transform paths fails the check only if
  // some enumerated state has all three methods enabled and both CP1
  // sequences legal. Unrealized discrepancies are still reported.
  kRealizable,
  // Every discrepancy fails the check, reachable or not.
  kLiteral,
};

enum class StateEquality { kStructural, kObservational };

struct CheckOptions {
  Cp2Semantics cp2 = Cp2Semantics::kRealizable;
  StateEquality equality = StateEquality::kStructural;
  int obs_depth = 1;  // context depth for StateEquality::kObservational
};

using Outcome = std::variant<State, Method>;

enum class WitnessKind { kCp1, kCp2, kCommutation };

/// A counterexample. CP1: the base state, [m1, m2] and the two final
/// states. Commutation: the base state, [u1, u2] and the finals of
/// [u1; u2] and [u2; u1]. CP2: [m1, m2, m3] and the two transformed
/// methods; `state` is a realizing state when one exists.
struct Witness {
  WitnessKind kind = WitnessKind::kCp1;
  std::optional<State> state;
  MethodSeq methods;
  Outcome left = Method::nop();
  Outcome right = Method::nop();
  bool realizable = true;
  bool replayed = false;
};

struct CheckReport {
  std::string component;
  Property property = Property::kCp1;
  std::string label;  // "cp1", "cp2[updates]", "cp1[updates x pattern]", ...
  Verdict verdict = Verdict::kVacuous;
  std::int64_t cases = 0;     // jointly legal pairs (CP1) or compared triples (CP2)
  std::int64_t examined = 0;  // combinations visited before legality filtering
  std::vector<Witness> witnesses;
  std::vector<Witness> unrealized;  // CP2 discrepancies no legal state reaches
  std::vector<CheckReport> parts;
  double elapsed_ms = 0;

  bool passed() const { return verdict == Verdict::kPass; }
};

/// A named subset of a component's methods. nop belongs to no class.
struct MethodClass {
  std::string name;
  std::function<bool(const Method&)> contains;
};

MethodClass all_methods();
MethodClass update_methods();
MethodClass pattern_methods();

// Sweeps over enum_states(b) x enum_methods(b), in lexicographic order of
// (state, m1, m2[, m3]) with the enumerators' own order, so the first
// witness is stable. A pair (m1, m2) issued by the same site is never
// treated as concurrent. Each throws Error(kBoundsExceeded) when the
// estimated sweep is above b.max_cases.

CheckReport check_cp1(const Component& c, const Bounds& b = {}, const CheckOptions& o = {});
CheckReport check_cp2(const Component& c, const Bounds& b = {}, const CheckOptions& o = {});

/// CP1|_{M'} and CP2|_{M'}: every method drawn from `m`.
CheckReport check_cp1_within(const Component& c, const MethodClass& m, const Bounds& b = {},
                             const CheckOptions& o = {});
CheckReport check_cp2_within(const Component& c, const MethodClass& m, const Bounds& b = {},
                             const CheckOptions& o = {});

/// CP1|_{M1,M2}: pairs with one method in each class, both ways round.
/// CP2|_{M1,M2}: triples over M1 u M2 not all drawn from one class.
/// Throws Error(kNotDisjoint) if an enumerated method is in both classes.
CheckReport check_cp1_restricted(const Component& c, const MethodClass& m1, const MethodClass& m2,
                                 const Bounds& b = {}, const CheckOptions& o = {});
CheckReport check_cp2_restricted(const Component& c, const MethodClass& m1, const MethodClass& m2,
                                 const Bounds& b = {}, const CheckOptions& o = {});

/// CP1 and CP2. A dynamic composition is checked part by part (Updates
/// alone, pattern methods alone, and the cross checks); any other
/// component gets the full sweeps. Fails if a part fails, otherwise vacuous
/// if a part is vacuous.
CheckReport check_consistency(const Component& c, const Bounds& b = {}, const CheckOptions& o = {});

/// Distinct-target Updates commute: for Updates with different addresses
/// or old children, whenever [u1; u2] and [u2; u1] are both legal they
/// reach the same state. The report uses the CP1 witness layout.
CheckReport check_update_commutation(const Component& c, const Bounds& b = {});

/// Re-executes a witness from scratch; true when the two sides still differ.
bool replay_witness(const Component& c, const Witness& w, const CheckOptions& o = {},
                    const Bounds& b = {});

/// Stable-key JSON. `with_elapsed` = false drops the timing field so that
/// reports can be compared byte for byte.
Json to_json(const Component& c, const CheckReport& r, bool with_elapsed = true);
std::string to_text(const CheckReport& r);

Json to_json(const Component& c, const Witness& w);
/// Inverse of to_json(c, w). Throws Error(kInvalidLiteral).
Witness witness_from_json(const Component& c, const Json& j);

}  // namespace otcomp
