#include <gtest/gtest.h>

#include "common.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

std::map<int, int> face_lengths(const CubicGraph& g) {
  std::map<int, int> hist;
  for (const auto& f : enumerate_faces(g, compute_embedding(g))) ++hist[f.length()];
  return hist;
}

}  // namespace

TEST(Embedding, K4HasFourTriangles) {
  auto g = k4();
  auto rot = compute_embedding(g);
  EXPECT_EQ(euler_characteristic(g, rot), 2);
  EXPECT_EQ(face_lengths(g), (std::map<int, int>{{3, 4}}));
}

TEST(Embedding, PrismHasTwoTrianglesThreeSquares) {
  EXPECT_EQ(face_lengths(triangular_prism()), (std::map<int, int>{{3, 2}, {4, 3}}));
}

TEST(Embedding, CubeHasSixSquares) { EXPECT_EQ(face_lengths(cube()), (std::map<int, int>{{4, 6}})); }

TEST(Embedding, DodecahedronHasTwelvePentagons) {
  EXPECT_EQ(face_lengths(dodecahedron()), (std::map<int, int>{{5, 12}}));
}

TEST(Embedding, ParallelEdgesBoundDigons) {
  auto hist = face_lengths(double_ring());
  EXPECT_EQ(hist[2], 2);
  auto t = theta();
  EXPECT_EQ(euler_characteristic(t, compute_embedding(t)), 2);
}

TEST(Embedding, PetersenIsNonPlanar) {
  try {
    compute_embedding(fixture("petersen"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_planar);
  }
  for (const auto& name : fixture_names()) EXPECT_THROW(compute_embedding(fixture(name)), Error) << name;
}

TEST(Embedding, IncidenceOrderOfPetersenIsNotSpherical) {
  auto g = fixture("petersen");
  EXPECT_FALSE(is_planar_rotation(g, RotationSystem::from_incidence(g)));
}

TEST(Embedding, MismatchedRotationRejected) {
  auto g = k4();
  auto rot = compute_embedding(g);
  std::swap(rot.order[0][0], rot.order[1][0]);
  try {
    enumerate_faces(g, rot);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent_rotation);
  }
}

TEST(Embedding, SuppliedRotationSatisfiesEuler) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int n = 4 + 2 * static_cast<int>(seed % 20);
    auto eg = generate_random_cubic_planar(n, seed, seed % 2 ? GrowthPolicy::uniform : GrowthPolicy::pentagonal);
    auto faces = enumerate_faces(eg.graph, eg.rotation);
    EXPECT_EQ(static_cast<int>(faces.size()), 2 - n + eg.graph.num_edges());
    std::set<Link> darts;
    for (const auto& f : faces)
      for (const auto& d : f.boundary) EXPECT_TRUE(darts.insert(d).second);
    EXPECT_EQ(static_cast<int>(darts.size()), 2 * eg.graph.num_edges());
    auto recomputed = compute_embedding(eg.graph);
    EXPECT_EQ(euler_characteristic(eg.graph, recomputed), 2);
  }
}

TEST(Embedding, FaceWalkIsClosed) {
  auto g = cube();
  auto rot = compute_embedding(g);
  for (const auto& f : enumerate_faces(g, rot))
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      const Link& d = f.boundary[i];
      const Link& nx = f.boundary[(i + 1) % f.boundary.size()];
      EXPECT_EQ(g.endpoint(d.opposite()), g.endpoint(nx));
    }
}

TEST(MinFace, Lengths) {
  auto mf = [](const CubicGraph& g) { return min_face(g, compute_embedding(g)).length(); };
  EXPECT_EQ(mf(k4()), 3);
  EXPECT_EQ(mf(cube()), 4);
  EXPECT_EQ(mf(dodecahedron()), 5);
  EXPECT_EQ(mf(triangular_prism()), 3);
  EXPECT_EQ(mf(double_ring()), 2);
}

TEST(MinFace, TieBreakOnSortedEdgeIds) {
  auto g = cube();
  auto faces = enumerate_faces(g, compute_embedding(g));
  auto best = min_face(faces);
  auto key = [](const Face& f) {
    auto k = f.edge_ids();
    std::sort(k.begin(), k.end());
    return k;
  };
  for (const auto& f : faces) EXPECT_LE(key(best), key(f));
  EXPECT_EQ(key(best), (std::vector<EdgeId>{0, 1, 2, 3}));
}

TEST(ApplyRotation, IncidenceFollowsRotation) {
  auto g = dodecahedron();
  auto rot = compute_embedding(g);
  auto h = apply_rotation(g, rot);
  EXPECT_EQ(RotationSystem::from_incidence(h), rot);
  EXPECT_TRUE(is_planar_rotation(h, RotationSystem::from_incidence(h)));
}
