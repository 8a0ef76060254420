#pragma once

#include <string>

#include "otcomp/composition.hpp"
#include "otcomp/patterns.hpp"
#include "otcomp/primitives.hpp"
#include "otcomp/value.hpp"

namespace testing_util {

using namespace otcomp;

inline State chr(char c) { return State::cell(Char{c}); }
inline State nat(std::int64_t n) { return State::cell(Nat{n}); }
inline State color(Color c) { return State::cell(c); }
inline State unset() { return State::cell(Bottom{}); }

inline Method putchar_(char c) { return Method("putchar", {Char{c}}); }
inline Method putnat(std::int64_t n) { return Method("putnat", {Nat{n}}); }
inline Method putcolor(Color c) { return Method("putcolor", {c}); }

inline State atom(const std::string& name) { return State::opaque(Symbol{name}); }
inline State letter(char c) { return State::opaque(Char{c}); }

inline Method add(State e) { return Method("add", {std::move(e)}); }
inline Method remove(State e) { return Method("remove", {std::move(e)}); }
inline Method ins(std::int64_t p, State e, SiteId site) { return Method("Ins", {Nat{p}, std::move(e)}, site); }
inline Method del(std::int64_t p, SiteId site) { return Method("Del", {Nat{p}}, site); }

inline std::shared_ptr<const DynamicComposition> setchar() {
  return dynamic_compose(set_pattern(SetVariant::kGuarded), cchar());
}

inline ComponentPtr fchar() {
  return static_compose({cchar(), cnat(), ccolor()}, NamePolicy::kRequireDisjoint);
}

}  // namespace testing_util
