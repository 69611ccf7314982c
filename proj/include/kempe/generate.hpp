#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kempe/embedding.hpp"
#include "kempe/graph.hpp"

namespace kempe {

enum class GrowthPolicy {
  uniform,     // every (face, edge pair) equally likely
  pentagonal,  // keep the smallest face as large as possible
};

inline std::string to_string(GrowthPolicy p) { return p == GrowthPolicy::uniform ? "uniform" : "pentagonal"; }

inline GrowthPolicy parse_growth_policy(const std::string& s) {
  if (s == "uniform") return GrowthPolicy::uniform;
  if (s == "pentagonal") return GrowthPolicy::pentagonal;
  throw Error(ErrorCode::parse_error, "unknown growth policy '" + s + "'");
}

struct EmbeddedGraph {
  CubicGraph graph;
  RotationSystem rotation;
};

namespace detail {

struct Growth {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<CubicGraph::Incidence> rotation;

  CubicGraph graph() const { return CubicGraph::from_edges(static_cast<int>(rotation.size()), edges); }

  static void replace(CubicGraph::Incidence& inc, EdgeId from, EdgeId to) {
    *std::find(inc.begin(), inc.end(), from) = to;
  }

  /// Subdivides the edge of dart `d` at a new vertex; the tail side keeps the
  /// id. Returns (new vertex, id of the head-side half).
  std::pair<VertexId, EdgeId> split(Link d) {
    auto& en = edges[static_cast<std::size_t>(d.edge)];
    VertexId head = d.side == 0 ? en.second : en.first;
    VertexId mid = static_cast<VertexId>(rotation.size());
    EdgeId half = static_cast<EdgeId>(edges.size());
    (d.side == 0 ? en.second : en.first) = mid;
    edges.emplace_back(mid, head);
    replace(rotation[static_cast<std::size_t>(head)], d.edge, half);
    rotation.push_back({d.edge, kNoEdge, half});
    return {mid, half};
  }

  /// Joins the midpoints of darts `d1` and `d2` of one face through its interior.
  void insert(Link d1, Link d2) {
    auto [u1, h1] = split(d1);
    auto [u2, h2] = split(d2);
    EdgeId n = static_cast<EdgeId>(edges.size());
    edges.emplace_back(u1, u2);
    rotation[static_cast<std::size_t>(u1)][1] = n;
    rotation[static_cast<std::size_t>(u2)][1] = n;
    (void)h1;
    (void)h2;
  }
};

inline Growth k4_growth() {
  Growth g;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.rotation.resize(4);
  g.rotation = compute_embedding(g.graph()).order;
  return g;
}

}  // namespace detail

/// A bridgeless cubic planar graph on `n` vertices grown from K4 by joining
/// the midpoints of two distinct edges of a common face; deterministic per seed.
inline EmbeddedGraph generate_random_cubic_planar(int n, std::uint64_t seed, GrowthPolicy policy = GrowthPolicy::uniform) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::precondition, "vertex count must be even and at least 4");
  std::mt19937_64 rng(seed);
  auto growth = detail::k4_growth();

  struct Candidate {
    std::size_t face;
    std::size_t i, j;
  };
  while (static_cast<int>(growth.rotation.size()) < n) {
    CubicGraph g = growth.graph();
    RotationSystem rot{growth.rotation};
    auto faces = enumerate_faces(g, rot);
    std::vector<Candidate> pool;
    if (policy == GrowthPolicy::uniform) {
      for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].boundary.size(); ++i)
          for (std::size_t j = i + 1; j < faces[f].boundary.size(); ++j) pool.push_back({f, i, j});
    } else {
      std::vector<std::array<int, 2>> face_of(static_cast<std::size_t>(g.edge_capacity()));
      for (std::size_t f = 0; f < faces.size(); ++f)
        for (const Link& d : faces[f].boundary) face_of[d.edge][static_cast<std::size_t>(d.side)] = static_cast<int>(f);
      std::vector<int> len;
      for (const auto& f : faces) len.push_back(f.length());
      int best = -1;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& bd = faces[f].boundary;
        const int L = static_cast<int>(bd.size());
        for (std::size_t i = 0; i < bd.size(); ++i)
          for (std::size_t j = i + 1; j < bd.size(); ++j) {
            int gap = static_cast<int>(j - i);
            int score = std::min(L - gap + 2, gap + 2);
            std::vector<int> grow(faces.size(), 0);
            ++grow[static_cast<std::size_t>(face_of[bd[i].edge][static_cast<std::size_t>(1 - bd[i].side)])];
            ++grow[static_cast<std::size_t>(face_of[bd[j].edge][static_cast<std::size_t>(1 - bd[j].side)])];
            for (std::size_t h = 0; h < faces.size() && score > best - 1; ++h)
              if (h != f) score = std::min(score, len[h] + grow[h]);
            if (score > best) {
              best = score;
              pool.clear();
            }
            if (score == best) pool.push_back({f, i, j});
          }
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const auto& c = pool[pick(rng)];
    growth.insert(faces[c.face].boundary[c.i], faces[c.face].boundary[c.j]);
  }
  EmbeddedGraph out{growth.graph(), RotationSystem{growth.rotation}};
  return out;
}

}  // namespace kempe
