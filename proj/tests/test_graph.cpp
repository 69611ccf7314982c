#include <gtest/gtest.h>

#include "common.hpp"

using namespace kempe;
using namespace testing_support;

TEST(Graph, K4HasFourVerticesSixEdges) {
  auto g = k4();
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_EQ(2 * g.num_edges(), 3 * g.num_vertices());
}

TEST(Graph, DegreeViolationIsNotCubic) {
  try {
    CubicGraph::from_edges(2, EdgeList{{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_cubic);
  }
  try {
    CubicGraph::from_edges(2, EdgeList{{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_cubic);
  }
}

TEST(Graph, LoopRejected) {
  try {
    CubicGraph::from_edges(2, EdgeList{{0, 0}, {0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::loop_edge);
  }
}

TEST(Graph, EndpointOutOfRangeIsParseError) {
  try {
    CubicGraph::from_edges(2, EdgeList{{0, 5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
  }
}

TEST(Graph, LinksAndSides) {
  auto g = k4();
  EXPECT_EQ(g.side_of(0, 0), 0);
  EXPECT_EQ(g.side_of(0, 1), 1);
  EXPECT_EQ(g.other_end(0, 0), 1);
  EXPECT_EQ(g.endpoint(Link{0, 1}), 1);
  EXPECT_EQ((Link{3, 0}.opposite()), (Link{3, 1}));
  EXPECT_THROW(g.side_of(1, 0), Error);
}

TEST(Graph, MultiplicityCountsParallelEdges) {
  auto t = theta();
  EXPECT_EQ(t.multiplicity(0, 1), 3);
  auto r = double_ring();
  EXPECT_EQ(r.multiplicity(0, 1), 2);
  EXPECT_EQ(r.multiplicity(1, 2), 1);
}

TEST(Bridgeless, KnownGraphs) {
  EXPECT_TRUE(is_bridgeless(k4()));
  EXPECT_TRUE(is_bridgeless(fixture("petersen")));
  EXPECT_TRUE(is_bridgeless(theta()));
  EXPECT_TRUE(is_bridgeless(double_ring()));
  auto b = bridged_pair();
  EXPECT_FALSE(is_bridgeless(b));
  EXPECT_EQ(bridges(b), oracle_bridges(b));
  EXPECT_EQ(bridges(b).size(), 1u);
}

TEST(Bridgeless, ParallelEdgesAreNeverBridges) {
  auto r = double_ring();
  for (EdgeId e : bridges(r)) EXPECT_EQ(r.multiplicity(r.ends(e).first, r.ends(e).second), 1);
  EXPECT_TRUE(bridges(r).empty());
}

TEST(Bridgeless, MatchesRemovalOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    int n = 4 + 2 * static_cast<int>(rng() % 8);
    EdgeList e;
    std::vector<VertexId> pts;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) pts.push_back(v);
    std::shuffle(pts.begin(), pts.end(), rng);
    bool loop = false;
    for (std::size_t i = 0; i < pts.size(); i += 2) {
      loop = loop || pts[i] == pts[i + 1];
      e.emplace_back(pts[i], pts[i + 1]);
    }
    if (loop) continue;
    auto g = CubicGraph::from_edges(n, e);
    if (!is_connected(g)) continue;
    EXPECT_EQ(bridges(g), oracle_bridges(g));
  }
}

TEST(Girth, KnownValues) {
  EXPECT_EQ(girth(k4()), 3);
  EXPECT_EQ(girth(cube()), 4);
  EXPECT_EQ(girth(fixture("petersen")), 5);
  EXPECT_EQ(girth(dodecahedron()), 5);
  EXPECT_EQ(girth(theta()), 2);
  EXPECT_EQ(girth(double_ring()), 2);
  EXPECT_EQ(girth(fixture("double_star")), 6);
}

TEST(Girth, MatchesEdgeRemovalOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    auto g = random_cubic(4 + 2 * static_cast<int>(rng() % 10), rng);
    EXPECT_EQ(girth(g), oracle_girth(g));
  }
}

TEST(Rotation, IncidenceRotationMatches) {
  auto g = cube();
  auto rot = RotationSystem::from_incidence(g);
  EXPECT_TRUE(rotation_matches(g, rot));
  rot.order[0][0] = 11;
  EXPECT_FALSE(rotation_matches(g, rot));
  EXPECT_EQ(RotationSystem::from_incidence(g).next(0, g.incident(0)[2]), g.incident(0)[0]);
}

TEST(Compact, RemovesDeadSlots) {
  auto [h, tr] = delete_edge_smooth(cube(), 0);
  EXPECT_LT(h.num_edges(), h.edge_capacity());
  auto c = compact(h);
  EXPECT_EQ(c.graph.num_vertices(), 6);
  EXPECT_EQ(c.graph.num_edges(), 9);
  EXPECT_EQ(c.graph.vertex_capacity(), 6);
  EXPECT_EQ(c.edge_map[tr.deleted], kNoEdge);
  EXPECT_TRUE(are_isomorphic(c.graph, h));
}
