#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "otcomp/component.hpp"
#include "otcomp/patterns.hpp"

namespace otcomp {

// Composition expressions:
//
//   expr := term { "(+)" term }          static composition, left-assoc
//   term := name [ "[" expr "]" ] | "(" expr ")"
//
// A bare name is a registered component; `pattern[expr]` composes the
// expression dynamically into a registered pattern. A pattern name used
// alone denotes its bare component (set over atoms, string over chars).

struct ExprNode {
  enum class Kind { kName, kStatic, kDynamic };
  Kind kind = Kind::kName;
  std::string name;  // registry name for kName and kDynamic
  std::size_t position = 0;
  std::vector<ExprNode> children;
};

/// Throws ParseError with the 0-based offset of the problem.
ExprNode parse_expression(std::string_view text);

/// Canonical text of a parse tree.
std::string to_string(const ExprNode& e);

struct RegistryEntry {
  std::string name;
  std::string kind;  // "component" or "pattern"
  std::string description;
};

/// Registered names in a fixed order.
std::vector<RegistryEntry> registry();

/// Error(kUnknownComponent) for names not in the registry.
ComponentPtr lookup_component(const std::string& name);
/// nullptr when `name` is not a pattern.
const CompositionPattern* lookup_pattern(const std::string& name);

/// Builds the component, checking admissibility at every dynamic node
/// against `b`.
ComponentPtr build(const ExprNode& e, const Bounds& b = {});
ComponentPtr build_expression(std::string_view text, const Bounds& b = {});

}  // namespace otcomp
