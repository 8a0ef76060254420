#include <gtest/gtest.h>

#include "otcomp/document.hpp"
#include "otcomp/kernel.hpp"

using namespace otcomp;

TEST(Document, TowerHasNineAdmissibleLevels) {
  const auto t = build_document_tower();
  std::vector<std::string> labels;
  for (const auto& l : t.levels) labels.push_back(l.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"FCHAR", "WORD", "FWORD", "SENTENCE", "FSENTENCE", "PARAGRAPH",
                                              "FPARAGRAPH", "PAGE", "FPAGE"}));
  std::size_t dynamic = 0;
  for (const auto& l : t.levels) {
    if (!l.admissibility) continue;
    ++dynamic;
    EXPECT_TRUE(l.admissibility->passed) << l.label;
    EXPECT_GE(l.admissibility->states, 2u);
  }
  EXPECT_EQ(dynamic, 4u);
  // Decorated levels add putnat and putcolor; string levels add Ins, Del, Update.
  EXPECT_EQ(t.level("FCHAR").component->methods().size(), 3u);
  EXPECT_EQ(t.level("WORD").component->methods().size(), 3u);
  EXPECT_EQ(t.level("FWORD").component->methods().size(), 5u);
  EXPECT_EQ(t.level("FWORD").component->name(), "string[cchar (+) cnat (+) ccolor] (+) cnat (+) ccolor");
  EXPECT_EQ(t.level("FPAGE").component->methods().size(), 5u);
}

TEST(Document, FwordScenarioConverges) {
  const auto d = run_document_demo(false);
  EXPECT_TRUE(d.fword.converged);
  EXPECT_FALSE(d.fword.partially_legal);
  ASSERT_EQ(d.fword.runs.size(), 2u);
  const auto& fword = *d.tower.level("FWORD").component;
  // The recolored character moved to position 2 behind the insertion.
  const Json final_state = fword.encode_state(d.fword.runs[0].final_state);
  EXPECT_EQ(final_state[0][2], Json::array({"a", 0, "green"}));
  EXPECT_EQ(final_state[0][0], Json::array({"b", 2, "blue"}));
  EXPECT_FALSE(d.fchar_consistency.has_value());
  EXPECT_TRUE(d.ok());
}

TEST(Document, CheckRunsFcharConsistency) {
  const auto d = run_document_demo(true);
  ASSERT_TRUE(d.fchar_consistency.has_value());
  EXPECT_TRUE(d.fchar_consistency->passed());
  EXPECT_TRUE(d.ok());
  const auto j = to_json(d, false);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["levels"].size(), 9u);
}
