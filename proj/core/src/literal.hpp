#pragma once

// JSON forms of scalar data shared by the component codecs.

#include <string>

#include "otcomp/component.hpp"
#include "otcomp/error.hpp"

namespace otcomp::detail {

[[noreturn]] inline void bad_literal(const std::string& what, const Json& j) {
  throw Error(ErrorCode::kInvalidLiteral, what + ", got " + j.dump());
}

inline Json encode_scalar(const Datum& d) {
  if (d.is_bottom()) return nullptr;
  if (d.is<bool>()) return d.as<bool>();
  if (d.is<Char>()) return std::string(1, d.as<Char>().value);
  if (d.is<Nat>()) return d.as<Nat>().value;
  if (d.is<Color>()) return to_string(d.as<Color>());
  if (d.is<Symbol>()) return d.as<Symbol>().name;
  throw Error(ErrorCode::kInvalidLiteral, "not a scalar datum: " + to_string(d));
}

inline Char decode_char(const Json& j) {
  if (!j.is_string() || j.get<std::string>().size() != 1) bad_literal("expected a 1-character string", j);
  return Char{j.get<std::string>()[0]};
}

inline Nat decode_nat(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad_literal("expected a natural number", j);
  return Nat{j.get<std::int64_t>()};
}

inline Color decode_color(const Json& j) {
  if (!j.is_string()) bad_literal("expected a color name", j);
  auto c = parse_color(j.get<std::string>());
  if (!c) bad_literal("expected red, green or blue", j);
  return *c;
}

inline Symbol decode_symbol(const Json& j) {
  if (!j.is_string() || j.get<std::string>().empty()) bad_literal("expected an atom name", j);
  return Symbol{j.get<std::string>()};
}

inline void require_arity(const std::string& ctor, const Json& args, std::size_t n) {
  if (!args.is_array() || args.size() != n) {
    bad_literal(ctor + " takes " + std::to_string(n) + " argument(s)", args);
  }
}

}  // namespace otcomp::detail
