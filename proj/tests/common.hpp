#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "kempe/kempe.hpp"

namespace testing_support {

using namespace kempe;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

inline CubicGraph k4() { return CubicGraph::from_edges(4, EdgeList{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}}); }

/// Triangle 0-1-2 over triangle 3-4-5.
inline CubicGraph triangular_prism() {
  return CubicGraph::from_edges(6, EdgeList{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline CubicGraph cube() {
  return CubicGraph::from_edges(8, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline CubicGraph pentagonal_prism() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 1) % 5 + 5);
  }
  return CubicGraph::from_edges(10, e);
}

inline CubicGraph dodecahedron() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + i);
    e.emplace_back(5 + i, 10 + i);
    e.emplace_back(10 + i, 5 + (i + 1) % 5);
    e.emplace_back(10 + i, 15 + i);
    e.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  return CubicGraph::from_edges(20, e);
}

/// Two vertices joined by three parallel edges.
inline CubicGraph theta() { return CubicGraph::from_edges(2, EdgeList{{0, 1}, {0, 1}, {0, 1}}); }

/// 4-cycle with alternate edges doubled.
inline CubicGraph double_ring() { return CubicGraph::from_edges(4, EdgeList{{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}}); }

/// Two copies of K4 with one edge subdivided, joined at the subdivision vertices.
inline CubicGraph bridged_pair() {
  EdgeList e;
  for (int b = 0; b < 2; ++b) {
    int o = 5 * b;
    e.insert(e.end(), {{o, o + 1}, {o, o + 2}, {o + 1, o + 2}, {o + 1, o + 3}, {o + 2, o + 3}, {o, o + 4}, {o + 4, o + 3}});
  }
  e.emplace_back(4, 9);
  return CubicGraph::from_edges(10, e);
}

// ---- independent oracles -------------------------------------------------

/// Connected after removing edge `skip` (kNoEdge: remove nothing)?
inline bool connected_without(const CubicGraph& g, EdgeId skip) {
  auto verts = g.vertices();
  if (verts.empty()) return true;
  std::set<VertexId> seen{verts.front()};
  std::vector<VertexId> stack{verts.front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.edges()) {
      if (e == skip) continue;
      auto [a, b] = g.ends(e);
      VertexId w = a == v ? b : b == v ? a : kNoVertex;
      if (w != kNoVertex && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == verts.size();
}

inline std::vector<EdgeId> oracle_bridges(const CubicGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges())
    if (!connected_without(g, e)) out.push_back(e);
  return out;
}

/// Shortest cycle: min over edges uv of 1 + dist(u, v) avoiding that edge.
inline int oracle_girth(const CubicGraph& g) {
  int best = 0;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_capacity()), -1);
    std::vector<VertexId> q{u};
    dist[u] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (EdgeId f : g.incident(q[h])) {
        if (f == e) continue;
        VertexId w = g.other_end(f, q[h]);
        if (dist[w] < 0) {
          dist[w] = dist[q[h]] + 1;
          q.push_back(w);
        }
      }
    if (dist[v] >= 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best;
}

/// Perfect matchings by include/exclude recursion over edge ids.
inline std::set<std::vector<EdgeId>> oracle_perfect_matchings(const CubicGraph& g) {
  std::set<std::vector<EdgeId>> out;
  auto edges = g.edges();
  std::vector<int> cover(static_cast<std::size_t>(g.vertex_capacity()), 0);
  std::vector<EdgeId> chosen;
  const std::size_t need = static_cast<std::size_t>(g.num_vertices() / 2);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (chosen.size() == need) {
      out.insert(chosen);
      return;
    }
    if (i == edges.size() || edges.size() - i < need - chosen.size()) return;
    auto [u, v] = g.ends(edges[i]);
    if (!cover[u] && !cover[v]) {
      cover[u] = cover[v] = 1;
      chosen.push_back(edges[i]);
      rec(i + 1);
      chosen.pop_back();
      cover[u] = cover[v] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  return out;
}

/// Proper 3-edge-colorability by exhaustive search over edge ids, checking a
/// complete assignment only at the leaves of each vertex's last edge.
inline bool oracle_three_edge_colorable(const CubicGraph& g) {
  auto edges = g.edges();
  std::vector<int> color(static_cast<std::size_t>(g.edge_capacity()), -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) return true;
    for (int c = 0; c < 3; ++c) {
      color[edges[i]] = c;
      bool ok = true;
      auto [u, v] = g.ends(edges[i]);
      for (VertexId w : {u, v})
        for (EdgeId f : g.incident(w))
          if (f != edges[i] && color[f] == c) ok = false;
      if (ok && rec(i + 1)) return true;
    }
    color[edges[i]] = -1;
    return false;
  };
  return rec(0);
}

/// Every automorphism of a compact graph as a vertex permutation (edge
/// multiplicities preserved), by plain backtracking in vertex order.
inline std::vector<std::vector<VertexId>> automorphisms(const CubicGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    ++adj[u][v];
    ++adj[v][u];
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> img(static_cast<std::size_t>(n), -1);
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(img);
      return;
    }
    for (VertexId y = 0; y < n; ++y) {
      if (taken[y]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = adj[k][j] == adj[y][img[j]];
      if (!ok) continue;
      img[k] = y;
      taken[y] = 1;
      rec(k + 1);
      taken[y] = 0;
    }
    img[k] = -1;
  };
  rec(0);
  return out;
}

/// Random connected bridgeless cubic multigraph without loops (pairing model).
inline CubicGraph random_cubic(int n, std::mt19937_64& rng, bool simple = false) {
  while (true) {
    std::vector<VertexId> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    EdgeList e;
    bool bad = false;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      auto u = points[i], v = points[i + 1];
      if (u == v) bad = true;
      auto key = std::minmax(u, v);
      if (simple && !seen.insert({key.first, key.second}).second) bad = true;
      e.emplace_back(u, v);
    }
    if (bad) continue;
    auto g = CubicGraph::from_edges(n, e);
    if (is_connected(g) && is_bridgeless(g)) return g;
  }
}

/// Random consistent coloring: a random matching state followed by random exchanges.
inline LinkColoring random_consistent(const CubicGraph& g, std::mt19937_64& rng, int exchanges) {
  auto m = random_perfect_matching(g, rng);
  Configuration cfg = from_matching(g, *m, static_cast<Color>(rng() % 3));
  LinkColoring col = cfg.coloring;
  auto verts = g.vertices();
  for (int k = 0; k < exchanges; ++k) {
    VertexId v = verts[rng() % verts.size()];
    auto inc = g.incident(v);
    int i = static_cast<int>(rng() % 3), j = (i + 1 + static_cast<int>(rng() % 2)) % 3;
    exchange(g, col, v, inc[static_cast<std::size_t>(i)], inc[static_cast<std::size_t>(j)]);
  }
  col.clear_certificate();
  return col;
}

}  // namespace testing_support
