#include <gtest/gtest.h>

#include "common.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

/// Petersen graph with edges `e` and `f` subdivided and the two new vertices joined.
CubicGraph petersen_plus_edge(EdgeId e, EdgeId f) {
  auto pe = detail::petersen_edges();
  EdgeList out;
  for (EdgeId k = 0; k < static_cast<EdgeId>(pe.size()); ++k) {
    auto [u, v] = pe[static_cast<std::size_t>(k)];
    if (k == e) {
      out.insert(out.end(), {{u, 10}, {10, v}});
    } else if (k == f) {
      out.insert(out.end(), {{u, 11}, {11, v}});
    } else {
      out.emplace_back(u, v);
    }
  }
  out.emplace_back(10, 11);
  return CubicGraph::from_edges(12, out);
}

}  // namespace

TEST(Oddness, KnownValues) {
  auto odd = [](const CubicGraph& g) {
    auto r = oddness(g);
    EXPECT_TRUE(r.exact);
    return r.oddness;
  };
  EXPECT_EQ(odd(k4()), 0);
  EXPECT_EQ(odd(cube()), 0);
  EXPECT_EQ(odd(dodecahedron()), 0);
  EXPECT_EQ(odd(fixture("petersen")), 2);
  EXPECT_EQ(odd(fixture("flower_j5")), 2);
  EXPECT_EQ(odd(fixture("double_star")), 2);
  EXPECT_EQ(oddness(fixture("petersen")).matchings_examined, 6u);
}

TEST(Oddness, ZeroExactlyWhenColorable) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto g = random_cubic(6 + 2 * static_cast<int>(rng() % 8), rng);
    EXPECT_EQ(oddness(g).oddness == 0, oracle_three_edge_colorable(g));
  }
}

TEST(ClosedSet, PetersenHasSixConfigurations) {
  auto set = closed_irreducible_set(fixture("petersen"));
  ASSERT_TRUE(set.has_value());
  EXPECT_EQ(set->members.size(), 6u);
  EXPECT_EQ(set->min_variables, 2);
  EXPECT_TRUE(set->violations.empty());
  EXPECT_EQ(set->states_tested, 600u);
}

TEST(ClosedSet, NoneForColorableGraphs) {
  EXPECT_FALSE(closed_irreducible_set(k4()).has_value());
  EXPECT_FALSE(closed_irreducible_set(cube()).has_value());
  EXPECT_FALSE(closed_irreducible_set(petersen_plus_edge(0, 9)).has_value());
}

TEST(ClosedSet, FlowerSnarkIsNonEmpty) {
  auto set = closed_irreducible_set(fixture("flower_j5"));
  ASSERT_TRUE(set.has_value());
  EXPECT_FALSE(set->members.empty());
  EXPECT_EQ(set->min_variables, 2);
  for (const auto& m : set->members) EXPECT_TRUE(is_perfect_matching(fixture("flower_j5"), m.edges));
}

TEST(ClosedSet, LimitsReported) {
  try {
    closed_irreducible_set(fixture("petersen"), ClosedSetLimits{2, 1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::limits_exceeded);
  }
  EXPECT_THROW(closed_irreducible_set(fixture("petersen"), ClosedSetLimits{100, 50}), Error);
}

TEST(RandomWalk, TetrahedronNeedsAtMostOneElimination) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_walk_solve(k4(), seed, 1000);
    ASSERT_TRUE(r.solved());
    EXPECT_TRUE(is_proper(k4(), *r.coloring));
    EXPECT_LE(r.stats.eliminations, 1u);
  }
}

TEST(RandomWalk, SolvesPlanarAndColorableGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto eg = generate_random_cubic_planar(20 + 2 * static_cast<int>(seed % 20), seed);
    auto r = random_walk_solve(eg.graph, seed, 1'000'000);
    ASSERT_TRUE(r.solved()) << seed;
    EXPECT_TRUE(is_proper(eg.graph, *r.coloring));
    EXPECT_TRUE(r.stats.monotone);
    EXPECT_EQ(r.stats.final_variables, 0);
  }
}

TEST(RandomWalk, ModifiedPetersenIsColored) {
  auto g = petersen_plus_edge(0, 9);
  ASSERT_TRUE(oracle_three_edge_colorable(g));
  auto r = random_walk_solve(g, 5, 100000);
  ASSERT_TRUE(r.solved());
  EXPECT_TRUE(is_proper(g, *r.coloring));
}

TEST(RandomWalk, PetersenTimesOut) {
  for (std::uint64_t budget : {100ull, 10000ull}) {
    auto r = random_walk_solve(fixture("petersen"), 1, budget);
    EXPECT_FALSE(r.solved());
    EXPECT_EQ(r.stats.final_variables, 2);
  }
}

TEST(RandomWalk, DeterministicPerSeed) {
  auto g = generate_random_cubic_planar(50, 3).graph;
  auto a = random_walk_solve(g, 9, 100000), b = random_walk_solve(g, 9, 100000);
  ASSERT_TRUE(a.solved() && b.solved());
  EXPECT_TRUE(a.coloring->same_links(*b.coloring));
  EXPECT_EQ(a.stats.states_tested, b.stats.states_tested);
  EXPECT_EQ(a.stats.global_steps, b.stats.global_steps);
}
