#include <gtest/gtest.h>

#include "common.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

Configuration petersen_config(std::size_t k = 0) {
  auto g = fixture("petersen");
  return from_matching(g, enumerate_perfect_matchings(g, 100).matchings.at(k));
}

}  // namespace

TEST(Pentagons, Counts) {
  EXPECT_EQ(five_cycles(fixture("petersen")).size(), 12u);
  EXPECT_EQ(five_cycles(dodecahedron()).size(), 12u);
  EXPECT_TRUE(five_cycles(cube()).empty());
  auto g = dodecahedron();
  EXPECT_EQ(pentagonal_faces(g, compute_embedding(g)).size(), 12u);
  for (const auto& p : five_cycles(g))
    for (int i = 0; i < 5; ++i) {
      auto [u, v] = g.ends(p.edges[static_cast<std::size_t>(i)]);
      std::set<VertexId> ends{u, v};
      EXPECT_EQ(ends, (std::set<VertexId>{p.vertices[static_cast<std::size_t>(i)], p.vertices[static_cast<std::size_t>((i + 1) % 5)]}));
    }
}

TEST(Petersen, AllSixConfigurationsIrreducibleOverHundredStates) {
  auto g = fixture("petersen");
  auto list = enumerate_perfect_matchings(g, 100);
  ASSERT_EQ(list.matchings.size(), 6u);
  for (const auto& m : list.matchings) {
    auto cfg = from_matching(g, m);
    EXPECT_EQ(state_count(cfg), 100);
    auto v = is_configuration_reducible(cfg, {true});
    EXPECT_EQ(v.kind, VerdictKind::irreducible_exhausted);
    EXPECT_EQ(v.states_tested, 100u);
    auto census = count_reducible_states(cfg, {true});
    EXPECT_EQ(census.tested, 100u);
    EXPECT_EQ(census.reducible, 0u);
    EXPECT_TRUE(census.exhausted);
  }
}

TEST(Petersen, ConfigurationsAreRelatedByAutomorphisms) {
  auto g = fixture("petersen");
  auto autos = automorphisms(g);
  EXPECT_EQ(autos.size(), 120u);
  auto list = enumerate_perfect_matchings(g, 100).matchings;
  std::set<std::vector<EdgeId>> images;
  for (const auto& p : autos) {
    std::vector<EdgeId> img;
    for (EdgeId e : list[0].edges) {
      auto [u, v] = g.ends(e);
      for (EdgeId f : g.edges()) {
        auto [x, y] = g.ends(f);
        if ((x == p[u] && y == p[v]) || (x == p[v] && y == p[u])) img.push_back(f);
      }
    }
    std::sort(img.begin(), img.end());
    images.insert(img);
  }
  std::set<std::vector<EdgeId>> all;
  for (const auto& m : list) all.insert(m.edges);
  EXPECT_EQ(images, all);
}

TEST(Petersen, BudgetExceeded) {
  auto v = is_configuration_reducible(petersen_config(), {true}, 7);
  EXPECT_EQ(v.kind, VerdictKind::budget_exceeded);
  EXPECT_EQ(v.states_tested, 7u);
}

TEST(Witness, FoundOnPetersenGraph) {
  auto cfg = petersen_config();
  auto w = detect_petersen_configuration(cfg, five_cycles(cfg.g()));
  ASSERT_TRUE(w.has_value());
  const auto& p = w->pentagon;
  EXPECT_TRUE(cfg.matching.contains(p.edges[0]));
  EXPECT_TRUE(cfg.matching.contains(p.edges[3]));
  EXPECT_NE(w->single_cycle, w->double_cycle);
  std::set<EdgeId> vars;
  for (const auto& v : variables(cfg.g(), w->state)) vars.insert(v.edge);
  EXPECT_EQ(vars, (std::set<EdgeId>{p.edges[1], p.edges[4]}));
  EXPECT_TRUE(is_consistent(cfg.g(), w->state));
}

TEST(Witness, NoneWithoutTwoVariables) {
  auto g = k4();
  auto cfg = from_matching(g, Matching{{3, 5}});
  try {
    detect_petersen_configuration(cfg, five_cycles(g));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
}

TEST(Witness, NoneOnPentagonFreeGraph) {
  auto g = cube();
  for (const auto& m : enumerate_perfect_matchings(g, 100).matchings) {
    auto cfg = from_matching(g, m);
    if (cfg.tau_odd() != 2) continue;
    EXPECT_FALSE(detect_petersen_configuration(cfg, five_cycles(g)).has_value());
  }
}

TEST(Companion, TwoVariablesOnDisjointCycles) {
  auto cfg = petersen_config();
  auto w = *detect_petersen_configuration(cfg, five_cycles(cfg.g()));
  auto comp = companion_configuration(cfg, w);
  EXPECT_NE(comp.matching_color, cfg.matching_color);
  EXPECT_EQ(variable_count(comp.g(), comp.coloring), 2);
  EXPECT_EQ(comp.tau_odd(), 2);
  auto vars = variables(comp.g(), comp.coloring);
  EXPECT_NE(comp.cycle_of_edge[vars[0].edge], comp.cycle_of_edge[vars[1].edge]);
  EXPECT_TRUE(comp.matching.contains(w.pentagon.edges[0]));
  EXPECT_TRUE(is_consistent(comp.g(), comp.coloring));
}

TEST(Companion, ExchangesUndoThemselves) {
  auto cfg = petersen_config(2);
  auto w = *detect_petersen_configuration(cfg, five_cycles(cfg.g()));
  auto comp = companion_configuration(cfg, w);
  const auto& g = cfg.g();
  const auto& p = w.pentagon;
  LinkColoring col = comp.coloring;
  exchange(g, col, p.vertices[1], p.edges[1], p.edges[0]);
  exchange(g, col, p.vertices[0], p.edges[4], p.edges[0]);
  bool same_start = color_at(g, w.state, p.edges[4], p.vertices[0]) == color_at(g, w.state, p.edges[1], p.vertices[1]);
  if (same_start) {
    EXPECT_TRUE(col.same_links(w.state));
  }
  EXPECT_TRUE(is_consistent(g, col));
}

TEST(ReducePetersen, PetersenGraphIsIrreducible) {
  for (std::size_t k = 0; k < 6; ++k) {
    auto cfg = petersen_config(k);
    auto w = *detect_petersen_configuration(cfg, five_cycles(cfg.g()));
    auto v = reduce_petersen(cfg, w);
    EXPECT_EQ(v.kind, VerdictKind::irreducible_exhausted);
    EXPECT_FALSE(v.certificate.has_value());
    EXPECT_FALSE(v.via_companion);
    EXPECT_GE(v.states_tested, 100u);
    EXPECT_FALSE(v.notes.empty());
  }
}

TEST(ReducePetersen, PlanarInstancesReduceWithReducibleStates) {
  std::size_t events = 0, with_reducible = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto eg = generate_random_cubic_planar(36, seed, GrowthPolicy::pentagonal);
    SolveOptions opt;
    opt.census_budget = 100000;
    auto res = three_edge_color_planar(eg.graph, eg.rotation, opt);
    for (const auto& ev : res.petersen) {
      ++events;
      EXPECT_TRUE(ev.verdict.reduced());
      ASSERT_TRUE(ev.census.has_value());
      with_reducible += ev.census->reducible > 0 ? 1 : 0;
      std::uint64_t bound = 4ull << ev.tau_even;
      for (int n : ev.odd_lengths) bound *= static_cast<std::uint64_t>(n);
      if (!ev.verdict.via_companion) {
        EXPECT_LE(ev.verdict.states_tested, bound);
      }
      EXPECT_EQ(ev.odd_lengths.size(), 2u);
    }
  }
  EXPECT_GT(events, 0u);
  EXPECT_EQ(with_reducible, events);
}
