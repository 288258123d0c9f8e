#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace gtlie {
namespace {

std::vector<std::string> face_strings(const RibbonGraph& r) {
  std::vector<std::string> out;
  for (const auto& f : face_trace(r)) out.push_back(to_string(std::span<const Letter>(f)));
  return out;
}

TEST(PlanarRose, Examples) {
  const RibbonGraph r3 = planar_rose(3);
  EXPECT_EQ(r3.rank(), 2);
  EXPECT_EQ(to_string(r3), "a,A,b,B");
  EXPECT_EQ(to_string(planar_rose(2)), "a,A");
  EXPECT_THROW(planar_rose(1), InputError);
  EXPECT_THROW(planar_rose(0), InputError);
}

TEST(FaceTrace, HandTraces) {
  EXPECT_EQ(face_strings(planar_rose(2)), (std::vector<std::string>{"a", "A"}));
  // From a: arrive along A, successor b; from b: arrive along B, successor a.
  EXPECT_EQ(face_strings(planar_rose(3)), (std::vector<std::string>{"ab", "A", "B"}));
  EXPECT_EQ(face_strings(torus_rose()), (std::vector<std::string>{"aBAb"}));
}

TEST(SurfaceStats, Examples) {
  auto s = surface_stats(planar_rose(3));
  EXPECT_EQ(s.euler_char, -1);
  EXPECT_EQ(s.boundaries, 3);
  EXPECT_EQ(s.genus, 0);
  s = surface_stats(torus_rose());
  EXPECT_EQ(s.euler_char, -1);
  EXPECT_EQ(s.boundaries, 1);
  EXPECT_EQ(s.genus, 1);
  s = surface_stats(planar_rose(2));
  EXPECT_EQ(s.euler_char, 0);
  EXPECT_EQ(s.boundaries, 2);
  EXPECT_EQ(s.genus, 0);
}

TEST(Validate, Examples) {
  const auto a = Letter(0, false), A = Letter(0, true), b = Letter(1, false), B = Letter(1, true);
  EXPECT_FALSE(validate(2, {a, A, b, B}).has_value());
  EXPECT_TRUE(validate(2, {a, A, b, b}).has_value());
  EXPECT_TRUE(validate(2, {a, A, b}).has_value());
  EXPECT_TRUE(validate(2, {a, A, b, Letter(2, false)}).has_value());
  EXPECT_THROW(RibbonGraph(2, {a, A, b, b}), InputError);
}

TEST(ParseRibbon, Tokens) {
  EXPECT_EQ(parse_ribbon("a,b,A,B"), torus_rose());
  EXPECT_EQ(parse_ribbon("g0,G0,g1,G1"), planar_rose(3));
  EXPECT_THROW(parse_ribbon("a,A,b"), InputError);
  EXPECT_THROW(parse_ribbon("a,,A"), InputError);
  EXPECT_THROW(parse_ribbon("ab,A"), InputError);
  EXPECT_THROW(parse_ribbon("a,a"), InputError);
}

TEST(Properties, PlanarRosesAreSpheres) {
  for (int k = 2; k <= 12; ++k) {
    const auto s = surface_stats(planar_rose(k));
    EXPECT_EQ(s.genus, 0) << k;
    EXPECT_EQ(s.boundaries, k) << k;
  }
}

TEST(Properties, FacesPartitionHalfEdgesAndEulerIdentityHolds) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 6);
    std::vector<Letter> order;
    for (int c = 0; c < 2 * rank; ++c) order.push_back(Letter::from_code(c));
    std::shuffle(order.begin(), order.end(), rng);
    const RibbonGraph r(rank, order);
    const auto faces = face_trace(r);
    std::size_t total = 0;
    for (const auto& f : faces) total += f.size();
    EXPECT_EQ(total, static_cast<std::size_t>(2 * rank));
    const auto s = surface_stats(r);
    EXPECT_EQ(s.euler_char, 2 - 2 * s.genus - s.boundaries) << to_string(r);
  }
}

}  // namespace
}  // namespace gtlie
