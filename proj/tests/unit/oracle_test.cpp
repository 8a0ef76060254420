// The checker's case counts and verdicts against the brute-force models in
// oracles.hpp.

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "otcomp/checker.hpp"

using namespace otcomp;
using namespace testing_util;

namespace {

std::int64_t realizable(const CheckReport& r) {
  return static_cast<std::int64_t>(r.witnesses.size());
}

}  // namespace

TEST(Oracle, StringSweep) {
  Bounds b;
  b.alphabet = 2;
  b.max_len = 3;
  b.sites = 2;
  const auto expected = oracle::string_sweep("ab", 3, 2);
  const auto s = bare_string();
  const auto cp1 = check_cp1(*s, b);
  EXPECT_EQ(cp1.cases, expected.cp1_cases);
  EXPECT_EQ(static_cast<std::int64_t>(cp1.witnesses.size()), expected.cp1_failures);
  EXPECT_EQ(expected.cp1_failures, 0);
  const auto cp2 = check_cp2(*s, b);
  EXPECT_EQ(cp2.cases, expected.cp2_triples);
  EXPECT_EQ(realizable(cp2), expected.cp2_realizable);
  EXPECT_EQ(static_cast<std::int64_t>(cp2.unrealized.size()), expected.cp2_discrepancies - expected.cp2_realizable);
  EXPECT_GT(expected.cp2_realizable, 0);
}

TEST(Oracle, SetSweeps) {
  for (int u = 1; u <= 3; ++u) {
    Bounds b;
    b.universe = u;
    for (auto variant : {SetVariant::kLiteral, SetVariant::kGuarded}) {
      const bool guarded = variant == SetVariant::kGuarded;
      const auto expected = oracle::set_sweep(u, guarded);
      const auto s = bare_set(variant);
      const auto cp1 = check_cp1(*s, b);
      EXPECT_EQ(cp1.cases, expected.cp1_cases) << u << guarded;
      EXPECT_EQ(static_cast<std::int64_t>(cp1.witnesses.size()), expected.cp1_failures) << u << guarded;
      const auto cp2 = check_cp2(*s, b);
      EXPECT_EQ(cp2.cases, expected.cp2_triples);
      EXPECT_EQ(static_cast<std::int64_t>(cp2.witnesses.size() + cp2.unrealized.size()),
                expected.cp2_discrepancies);
    }
  }
}

TEST(Oracle, SetcharSweep) {
  const auto expected = oracle::cell_set_sweep(3, true);
  const auto sc = setchar();
  const auto cp1 = check_cp1(*sc);
  EXPECT_EQ(cp1.cases, expected.cp1_cases);
  EXPECT_EQ(expected.cp1_failures, 0);
  EXPECT_EQ(static_cast<std::int64_t>(cp1.witnesses.size()), expected.cp1_failures);
  const auto cp2 = check_cp2(*sc);
  EXPECT_EQ(cp2.cases, expected.cp2_triples);
  EXPECT_EQ(realizable(cp2), expected.cp2_realizable);
  EXPECT_EQ(static_cast<std::int64_t>(cp2.unrealized.size()), expected.cp2_discrepancies - expected.cp2_realizable);
}

TEST(Oracle, LiteralSetcharSweep) {
  const auto expected = oracle::cell_set_sweep(2, false);
  Bounds b;
  b.alphabet = 2;
  const auto c = dynamic_compose(set_pattern(SetVariant::kLiteral), cchar(), b);
  const auto cp1 = check_cp1(*c, b);
  EXPECT_EQ(cp1.cases, expected.cp1_cases);
  EXPECT_EQ(static_cast<std::int64_t>(cp1.witnesses.size()), expected.cp1_failures);
  EXPECT_GT(expected.cp1_failures, 0);
}
