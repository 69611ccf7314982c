#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

namespace detail {

/// Multiplicity of edges between each pair of alive vertices (dense indices).
inline std::vector<std::vector<int>> adjacency_counts(const CubicGraph& g, const std::vector<VertexId>& verts) {
  std::vector<int> dense(static_cast<std::size_t>(g.vertex_capacity()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) dense[verts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(verts.size(), std::vector<int>(verts.size(), 0));
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    ++adj[static_cast<std::size_t>(dense[u])][static_cast<std::size_t>(dense[v])];
    ++adj[static_cast<std::size_t>(dense[v])][static_cast<std::size_t>(dense[u])];
  }
  return adj;
}

/// Per-vertex signature: counts of vertices at each BFS distance, then the
/// sorted edge multiplicities to neighbours.
inline std::vector<std::vector<int>> vertex_signatures(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> sig(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t w = 0; w < n; ++w)
        if (adj[queue[h]][w] > 0 && dist[w] < 0) {
          dist[w] = dist[queue[h]] + 1;
          queue.push_back(w);
        }
    for (int d : dist) {
      std::size_t k = static_cast<std::size_t>(d + 1);
      if (sig[s].size() <= k) sig[s].resize(k + 1, 0);
      ++sig[s][k];
    }
    std::vector<int> mult;
    for (std::size_t w = 0; w < n; ++w)
      if (adj[s][w] > 0) mult.push_back(adj[s][w]);
    std::sort(mult.begin(), mult.end());
    sig[s].push_back(-1);
    sig[s].insert(sig[s].end(), mult.begin(), mult.end());
  }
  return sig;
}

}  // namespace detail

/// A vertex bijection preserving edge multiplicities, as pairs
/// (vertex of `g`, vertex of `h`) ordered by `g`'s vertex id; nullopt if the
/// graphs are not isomorphic. Backtracking with BFS-profile pruning, meant
/// for graphs of a few dozen vertices.
inline std::optional<std::vector<std::pair<VertexId, VertexId>>> find_isomorphism(const CubicGraph& g, const CubicGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  auto gv = g.vertices(), hv = h.vertices();
  auto ga = detail::adjacency_counts(g, gv), ha = detail::adjacency_counts(h, hv);
  auto gs = detail::vertex_signatures(ga), hs = detail::vertex_signatures(ha);
  {
    auto a = gs, b = hs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t n = gv.size();
  // Visit g's vertices in BFS order so every new vertex has a mapped neighbour.
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k)
      for (std::size_t w = 0; w < n; ++w)
        if (ga[order[k]][w] > 0 && !placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> to_h(n, -1), to_g(n, -1);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (to_g[y] >= 0 || gs[x] != hs[y]) continue;
      bool ok = ga[x][x] == ha[y][y];
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::size_t px = order[j];
        ok = ga[x][px] == ha[y][static_cast<std::size_t>(to_h[px])];
      }
      if (!ok) continue;
      to_h[x] = static_cast<int>(y);
      to_g[y] = static_cast<int>(x);
      if (self(self, k + 1)) return true;
      to_h[x] = -1;
      to_g[y] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(gv[i], hv[static_cast<std::size_t>(to_h[i])]);
  return out;
}

inline bool are_isomorphic(const CubicGraph& g, const CubicGraph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace kempe
