#include <gtest/gtest.h>

#include "common.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

std::set<std::vector<EdgeId>> as_set(const MatchingList& list) {
  std::set<std::vector<EdgeId>> out;
  for (const auto& m : list.matchings) out.insert(m.edges);
  return out;
}

}  // namespace

TEST(PerfectMatching, FoundOnKnownGraphs) {
  for (const auto& g : {k4(), cube(), dodecahedron(), fixture("petersen"), theta(), double_ring()}) {
    auto m = perfect_matching(g);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_perfect_matching(g, m->edges));
    EXPECT_EQ(static_cast<int>(m->edges.size()), g.num_vertices() / 2);
  }
}

TEST(PerfectMatching, AlwaysExistsWhenBridgeless) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 500; ++t) {
    auto g = random_cubic(4 + 2 * static_cast<int>(rng() % 20), rng);
    auto m = random_perfect_matching(g, rng);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_perfect_matching(g, m->edges));
  }
}

TEST(PerfectMatching, RandomDrawsDifferAndRepeatPerSeed) {
  auto g = dodecahedron();
  std::set<std::vector<EdgeId>> seen;
  for (int s = 0; s < 50; ++s) {
    std::mt19937_64 a(s), b(s);
    auto ma = random_perfect_matching(g, a), mb = random_perfect_matching(g, b);
    EXPECT_EQ(ma->edges, mb->edges);
    seen.insert(ma->edges);
  }
  EXPECT_GT(seen.size(), 1u);
}

TEST(PerfectMatching, GadgetWithBridge) {
  auto g = bridged_pair();
  auto m = perfect_matching(g);
  auto oracle = oracle_perfect_matchings(g);
  EXPECT_EQ(m.has_value(), !oracle.empty());
  if (m) {
    EXPECT_TRUE(oracle.count(m->edges));
  }
}

TEST(Enumerate, FrozenCounts) {
  EXPECT_EQ(enumerate_perfect_matchings(k4(), 1000).matchings.size(), 3u);
  EXPECT_EQ(enumerate_perfect_matchings(fixture("petersen"), 1000).matchings.size(), 6u);
  EXPECT_EQ(enumerate_perfect_matchings(cube(), 1000).matchings.size(), 9u);
  EXPECT_EQ(enumerate_perfect_matchings(dodecahedron(), 1000).matchings.size(), 36u);
  EXPECT_EQ(enumerate_perfect_matchings(fixture("flower_j5"), 1000).matchings.size(), 32u);
  EXPECT_EQ(enumerate_perfect_matchings(fixture("double_star"), 1000).matchings.size(), 124u);
}

TEST(Enumerate, EqualsIncludeExcludeOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto g = random_cubic(4 + 2 * static_cast<int>(rng() % 6), rng);
    EXPECT_EQ(as_set(enumerate_perfect_matchings(g, 1u << 20)), oracle_perfect_matchings(g));
  }
  for (const auto& g : {k4(), cube(), triangular_prism(), pentagonal_prism(), fixture("petersen"), double_ring()})
    EXPECT_EQ(as_set(enumerate_perfect_matchings(g, 1u << 20)), oracle_perfect_matchings(g));
}

TEST(Enumerate, SortedAndTruncated) {
  auto list = enumerate_perfect_matchings(dodecahedron(), 10);
  EXPECT_TRUE(list.truncated);
  EXPECT_EQ(list.matchings.size(), 10u);
  EXPECT_TRUE(std::is_sorted(list.matchings.begin(), list.matchings.end()));
  EXPECT_FALSE(enumerate_perfect_matchings(dodecahedron(), 36).truncated);
}

TEST(Matching, PerfectnessPredicate) {
  auto g = k4();
  EXPECT_TRUE(is_perfect_matching(g, {0, 2}));
  EXPECT_FALSE(is_perfect_matching(g, {0, 1}));
  EXPECT_FALSE(is_perfect_matching(g, {0}));
  EXPECT_FALSE(is_perfect_matching(g, {0, 17}));
}
