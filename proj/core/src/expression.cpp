#include "otcomp/expression.hpp"

#include <cctype>

#include "otcomp/composition.hpp"
#include "otcomp/error.hpp"
#include "otcomp/primitives.hpp"

namespace otcomp {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprNode parse() {
    ExprNode e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  ExprNode expr() {
    ExprNode left = term();
    while (true) {
      skip_space();
      if (!text_.substr(pos_).starts_with("(+)")) return left;
      const auto at = pos_;
      pos_ += 3;
      ExprNode right = term();
      ExprNode node;
      node.kind = ExprNode::Kind::kStatic;
      node.position = at;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
  }

  ExprNode term() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a component name");
    if (text_[pos_] == '(') {
      if (text_.substr(pos_).starts_with("(+)")) fail("'(+)' needs a left operand");
      ++pos_;
      ExprNode inner = expr();
      expect(')');
      return inner;
    }
    ExprNode node;
    node.position = pos_;
    node.name = identifier();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      node.kind = ExprNode::Kind::kDynamic;
      node.children.push_back(expr());
      expect(']');
    }
    return node;
  }

  std::string identifier() {
    const auto start = pos_;
    auto ok = [](char ch) {
      return std::islower(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch)) ||
             ch == '-' || ch == '_';
    };
    if (!std::islower(static_cast<unsigned char>(text_[pos_]))) fail("expected a component name");
    while (pos_ < text_.size() && ok(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const CompositionPattern& literal_set() {
  static const auto p = set_pattern(SetVariant::kLiteral);
  return p;
}
const CompositionPattern& guarded_set() {
  static const auto p = set_pattern(SetVariant::kGuarded);
  return p;
}
const CompositionPattern& strings() {
  static const auto p = string_pattern();
  return p;
}

}  // namespace

ExprNode parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::kName: return e.name;
    case ExprNode::Kind::kDynamic: return e.name + "[" + to_string(e.children.at(0)) + "]";
    case ExprNode::Kind::kStatic: break;
  }
  return to_string(e.children.at(0)) + " (+) " + to_string(e.children.at(1));
}

std::vector<RegistryEntry> registry() {
  return {
      {"cchar", "component", "character cell, concurrent puts keep the larger character"},
      {"cnat", "component", "natural-number cell, concurrent puts keep the smaller number"},
      {"ccolor", "component", "color cell over red < green < blue, concurrent puts keep the smaller"},
      {"set-literal", "pattern", "finite set, add always possible"},
      {"set-guarded", "pattern", "finite set, add only of absent elements"},
      {"string", "pattern", "sequence edited by Ins and Del with site tie-break"},
  };
}

ComponentPtr lookup_component(const std::string& name) {
  if (name == "cchar") return cchar();
  if (name == "cnat") return cnat();
  if (name == "ccolor") return ccolor();
  if (name == "set-literal") return bare_set(SetVariant::kLiteral);
  if (name == "set-guarded") return bare_set(SetVariant::kGuarded);
  if (name == "string") return bare_string();
  throw Error(ErrorCode::kUnknownComponent, "unknown component \"" + name + "\"");
}

const CompositionPattern* lookup_pattern(const std::string& name) {
  if (name == "set-literal") return &literal_set();
  if (name == "set-guarded") return &guarded_set();
  if (name == "string") return &strings();
  return nullptr;
}

ComponentPtr build(const ExprNode& e, const Bounds& b) {
  switch (e.kind) {
    case ExprNode::Kind::kName:
      if (lookup_pattern(e.name) == nullptr && e.name != "cchar" && e.name != "cnat" &&
          e.name != "ccolor") {
        throw ParseError(e.position, "unknown component \"" + e.name + "\"");
      }
      return lookup_component(e.name);
    case ExprNode::Kind::kDynamic: {
      const auto* p = lookup_pattern(e.name);
      if (!p) throw ParseError(e.position, "\"" + e.name + "\" is not a composition pattern");
      return dynamic_compose(*p, build(e.children.at(0), b), b);
    }
    case ExprNode::Kind::kStatic: break;
  }
  return static_compose(build(e.children.at(0), b), build(e.children.at(1), b));
}

ComponentPtr build_expression(std::string_view text, const Bounds& b) {
  return build(parse_expression(text), b);
}

}  // namespace otcomp
