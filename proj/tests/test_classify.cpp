#include <gtest/gtest.h>

#include "test_util.hpp"

namespace gtlie {
namespace {

using testing::cls;

const RibbonGraph kPants = planar_rose(3);

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(kPants, cls("a")));
  EXPECT_FALSE(is_simple(kPants, cls("aB")));
  EXPECT_FALSE(is_simple(kPants, cls("aa")));
  EXPECT_TRUE(is_simple(kPants, cls("ab")));
}

TEST(PowerOfSimple, Examples) {
  auto p = power_of_simple(kPants, cls("aaa"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(to_string(p->root), "a");
  EXPECT_EQ(p->exponent, 3);
  p = power_of_simple(kPants, cls("abab"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(to_string(p->root), "ab");
  EXPECT_EQ(p->exponent, 2);
  EXPECT_FALSE(power_of_simple(kPants, cls("aB")).has_value());
  p = power_of_simple(kPants, cls("b"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->exponent, 1);
}

TEST(TuraevStatus, Examples) {
  auto st = turaev_status(kPants, cls("a"));
  EXPECT_TRUE(st.cobracket_zero);
  EXPECT_TRUE(st.power_of_simple);
  EXPECT_TRUE(st.consistent);
  st = turaev_status(kPants, cls("aB"));
  EXPECT_FALSE(st.cobracket_zero);
  EXPECT_FALSE(st.power_of_simple);
  EXPECT_TRUE(st.consistent);
  EXPECT_EQ(to_string(turaev_status(kPants, CyclicWord(parse_word("Ba", 2))).word), "aB");
}

TEST(TuraevStatus, ConsistentOnPantsUpToLength9) {
  for (const auto& w : testing::all_classes(2, 9)) {
    EXPECT_TRUE(turaev_status(kPants, w).consistent) << to_string(w);
  }
}

TEST(TuraevStatus, RankOneSurfacesOnlyHavePowersOfSimples) {
  const RibbonGraph annulus = planar_rose(2);
  for (const auto& w : testing::all_classes(1, 10)) {
    const auto st = turaev_status(annulus, w);
    EXPECT_TRUE(st.power_of_simple);
    EXPECT_TRUE(st.cobracket_zero);
  }
}

TEST(TuraevStatus, ConverseHoldsOnTheTorus) {
  const RibbonGraph torus = torus_rose();
  for (const auto& w : testing::all_classes(2, 8)) {
    EXPECT_FALSE(turaev_status(torus, w).converse_violation()) << to_string(w);
  }
}

}  // namespace
}  // namespace gtlie
