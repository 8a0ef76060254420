#include <gtest/gtest.h>

#include "helpers.hpp"
#include "otcomp/composition.hpp"
#include "otcomp/document.hpp"
#include "otcomp/error.hpp"
#include "otcomp/expression.hpp"

using namespace otcomp;

TEST(Expression, ParsesStaticAndDynamic) {
  const auto e = parse_expression("string[cchar (+) cnat (+) ccolor] (+) cnat");
  EXPECT_EQ(e.kind, ExprNode::Kind::kStatic);
  ASSERT_EQ(e.children.size(), 2u);
  EXPECT_EQ(e.children[0].kind, ExprNode::Kind::kDynamic);
  EXPECT_EQ(e.children[0].name, "string");
  EXPECT_EQ(to_string(e), "string[cchar (+) cnat (+) ccolor] (+) cnat");
  EXPECT_EQ(to_string(parse_expression("  cchar(+)cnat ")), "cchar (+) cnat");
}

TEST(Expression, ParenthesesGroup) {
  const auto c = build_expression("(cchar (+) cnat) (+) ccolor");
  EXPECT_EQ(c->name(), "cchar (+) cnat (+) ccolor");
}

TEST(Expression, ParseErrorsCarryPositions) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"", 0}, {"cchar (+)", 9}, {"string[cchar", 12}, {"cchar]", 5}, {"cchar (+) 9", 10}};
  for (const auto& [text, pos] : cases) {
    try {
      parse_expression(text);
      FAIL() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
    }
  }
}

TEST(Expression, ResolutionErrors) {
  try {
    build_expression("cchar (+) nosuch");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  // Only patterns take an argument.
  EXPECT_THROW(build_expression("cchar[cnat]"), ParseError);
  EXPECT_THROW(lookup_component("nosuch"), Error);
  EXPECT_EQ(lookup_pattern("cchar"), nullptr);
  EXPECT_NE(lookup_pattern("string"), nullptr);
}

TEST(Expression, Registry) {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"cchar", "cnat", "ccolor", "set-literal", "set-guarded", "string"}));
  for (const auto& e : registry()) EXPECT_NO_THROW(build_expression(e.name)) << e.name;
}

TEST(Expression, BuildsTheDocumentChain) {
  const auto c = build_expression("string[string[cchar (+) cnat (+) ccolor] (+) cnat (+) ccolor]",
                                  document_bounds());
  const auto* d = dynamic_cast<const DynamicComposition*>(c.get());
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->child().name(), "string[cchar (+) cnat (+) ccolor] (+) cnat (+) ccolor");
}

TEST(Expression, BareNamesKeepNames) {
  EXPECT_EQ(build_expression("set-guarded")->name(), "set-guarded");
  EXPECT_EQ(build_expression("set-guarded[cchar]")->name(), "set-guarded[cchar]");
}
