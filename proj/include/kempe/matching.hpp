#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "kempe/graph.hpp"

namespace kempe {

/// Sorted edge ids of a matching.
struct Matching {
  std::vector<EdgeId> edges;

  auto operator<=>(const Matching&) const = default;
  bool contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }
};

inline bool is_perfect_matching(const CubicGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> cover(static_cast<std::size_t>(g.vertex_capacity()), 0);
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return false;
    ++cover[g.ends(e).first];
    ++cover[g.ends(e).second];
  }
  for (VertexId v : g.vertices())
    if (cover[v] != 1) return false;
  return true;
}

namespace detail {

/// Maximum matching on the simple graph underlying `g` with vertices visited
/// in `order`; returns matched edge ids (smallest id among parallels).
inline std::vector<EdgeId> edmonds_matching(const CubicGraph& g, const std::vector<VertexId>& order,
                                            const std::vector<EdgeId>* edge_order = nullptr) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  std::vector<int> dense(static_cast<std::size_t>(g.vertex_capacity()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) dense[order[i]] = static_cast<int>(i);
  BGraph bg(order.size());
  std::map<std::pair<int, int>, EdgeId> pick;
  auto edges = edge_order ? *edge_order : g.edges();
  for (EdgeId e : edges) {
    auto [u, v] = g.ends(e);
    auto key = std::minmax(dense[u], dense[v]);
    if (pick.emplace(std::pair{key.first, key.second}, e).second)
      boost::add_edge(static_cast<std::size_t>(key.first), static_cast<std::size_t>(key.second), bg);
  }
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(order.size());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto j = mate[i];
    if (j == boost::graph_traits<BGraph>::null_vertex() || j < i) continue;
    out.push_back(pick.at({static_cast<int>(i), static_cast<int>(j)}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// A perfect matching, or nullopt when none exists (only possible with bridges).
inline std::optional<Matching> perfect_matching(const CubicGraph& g) {
  auto m = detail::edmonds_matching(g, g.vertices());
  if (!is_perfect_matching(g, m)) return std::nullopt;
  return Matching{std::move(m)};
}

/// A perfect matching drawn by running the blossom search on a randomly
/// relabeled copy; deterministic for a given generator state.
template <class Rng>
std::optional<Matching> random_perfect_matching(const CubicGraph& g, Rng& rng) {
  auto order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  auto m = detail::edmonds_matching(g, order, &edges);
  if (!is_perfect_matching(g, m)) return std::nullopt;
  return Matching{std::move(m)};
}

struct MatchingList {
  std::vector<Matching> matchings;
  bool truncated = false;
};

/// All perfect matchings (up to `limit`), sorted lexicographically. Branches
/// on the smallest uncovered vertex, trying its edges in id order.
inline MatchingList enumerate_perfect_matchings(const CubicGraph& g, std::size_t limit) {
  MatchingList out;
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_capacity()), 1);
  for (VertexId v : g.vertices()) covered[v] = 0;
  auto verts = g.vertices();
  std::vector<EdgeId> chosen;

  auto rec = [&](auto&& self, std::size_t cursor) -> bool {
    while (cursor < verts.size() && covered[verts[cursor]]) ++cursor;
    if (cursor == verts.size()) {
      if (out.matchings.size() >= limit) {
        out.truncated = true;
        return false;
      }
      Matching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      out.matchings.push_back(std::move(m));
      return true;
    }
    VertexId v = verts[cursor];
    auto inc = g.incident(v);
    std::sort(inc.begin(), inc.end());
    covered[v] = 1;
    for (EdgeId e : inc) {
      VertexId w = g.other_end(e, v);
      if (covered[w]) continue;
      covered[w] = 1;
      chosen.push_back(e);
      bool go_on = self(self, cursor + 1);
      chosen.pop_back();
      covered[w] = 0;
      if (!go_on) {
        covered[v] = 0;
        return false;
      }
    }
    covered[v] = 0;
    return true;
  };
  rec(rec, 0);
  std::sort(out.matchings.begin(), out.matchings.end());
  return out;
}

}  // namespace kempe
