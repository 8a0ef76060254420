#pragma once

#include <string_view>
#include <vector>

#include "otcomp/component.hpp"

namespace otcomp {

// Sequence machinery over a component. Every function validates method
// constructors against the component and throws Error(kUnknownMethod) for
// undeclared ones. `nop` is accepted by every component:
//   Do(nop, st) = st, Poss(nop, st) = true,
//   IT(m, nop) = m,   IT(nop, m) = nop.

State apply(const Component& c, const Method& m, const State& st);
bool enabled(const Component& c, const Method& m, const State& st);
/// IT(m1, m2): m1 rewritten to include the effect of m2.
Method transform(const Component& c, const Method& m1, const Method& m2);

/// (st)[m1; ...; mn], folded left to right.
State apply_seq(const Component& c, const MethodSeq& seq, State st);
/// Poss of each item at the state reached by its prefix.
bool legal(const Component& c, const MethodSeq& seq, State st);
/// IT*(m, [m1; ...; mn]) = IT*(IT(m, m1), [m2; ...; mn]).
Method transform_seq(const Component& c, Method m, const MethodSeq& seq);

/// Attribute value on `st`. Observations the state does not determine (a
/// cell read before any put) come back as Bottom.
Datum observe(const Component& c, std::string_view attr, const std::vector<Datum>& args,
              const State& st);
/// Like observe, but throws Error(kUndefinedObservation) instead of
/// returning Bottom.
Datum observe_defined(const Component& c, std::string_view attr, const std::vector<Datum>& args,
                      const State& st);

/// Bounded observational equality: depth 0 compares every enumerated
/// observation; depth k also compares them after every method sequence of
/// length <= k drawn from enum_methods(b). A sequence legal on one state and
/// not on the other distinguishes them.
bool obs_equal(const Component& c, const State& s1, const State& s2, int depth,
               const Bounds& b = {});

}  // namespace otcomp
