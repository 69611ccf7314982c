#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kempe/configuration.hpp"
#include "kempe/isomorphism.hpp"
#include "kempe/matching.hpp"

namespace kempe {

/// Proper 3-edge colorability by backtracking over edges in BFS order with
/// the first vertex's colors fixed.
inline bool is_three_edge_colorable(const CubicGraph& g) {
  auto verts = g.vertices();
  if (verts.empty()) return true;
  std::vector<EdgeId> order;
  std::vector<char> seen_v(static_cast<std::size_t>(g.vertex_capacity()), 0), seen_e(static_cast<std::size_t>(g.edge_capacity()), 0);
  for (VertexId s : verts) {
    if (seen_v[s]) continue;
    std::vector<VertexId> queue{s};
    seen_v[s] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (EdgeId e : g.incident(queue[h])) {
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        VertexId w = g.other_end(e, queue[h]);
        if (!seen_v[w]) {
          seen_v[w] = 1;
          queue.push_back(w);
        }
      }
  }
  std::vector<int> color(static_cast<std::size_t>(g.edge_capacity()), -1);
  std::vector<int> used(static_cast<std::size_t>(g.vertex_capacity()), 0);  // bitmask per vertex
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    EdgeId e = order[k];
    auto [u, v] = g.ends(e);
    int free = ~(used[u] | used[v]) & 7;
    if (k < 3) free &= 1 << k;  // the first vertex's three edges are a, b, c
    for (int c = 0; c < 3; ++c) {
      if (!(free & (1 << c))) continue;
      color[e] = c;
      used[u] |= 1 << c;
      used[v] |= 1 << c;
      if (self(self, k + 1)) return true;
      used[u] &= ~(1 << c);
      used[v] &= ~(1 << c);
    }
    color[e] = -1;
    return false;
  };
  return rec(rec, 0);
}

namespace detail {

inline CubicGraph from_adjacency(const std::vector<std::vector<VertexId>>& adj) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (VertexId v : adj[u])
      if (static_cast<VertexId>(u) < v) edges.emplace_back(static_cast<VertexId>(u), v);
  return CubicGraph::from_edges(static_cast<int>(adj.size()), edges);
}

/// Outer cycle 0..4, spokes i -> i+5, inner pentagram (i+5) -> (i+2)%5+5.
inline std::vector<std::pair<VertexId, VertexId>> petersen_edges() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return e;
}

/// Flower snark J5: centres A_i = i, B_i = 5+i on a 5-cycle, and C_i = 10+i,
/// D_i = 15+i on one 10-cycle C0..C4 D0..D4.
inline CubicGraph flower_j5() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, 5 + i);
    e.emplace_back(i, 10 + i);
    e.emplace_back(i, 15 + i);
    e.emplace_back(5 + i, 5 + (i + 1) % 5);
  }
  for (int i = 0; i < 4; ++i) {
    e.emplace_back(10 + i, 11 + i);
    e.emplace_back(15 + i, 16 + i);
  }
  e.emplace_back(14, 15);
  e.emplace_back(19, 10);
  return CubicGraph::from_edges(20, e);
}

/// Double star snark, adjacency as published with SageMath's graph library.
inline CubicGraph double_star() {
  return from_adjacency({{1, 14, 15},  {0, 2, 11},   {1, 3, 7},    {2, 4, 18},   {3, 5, 14},   {10, 4, 6},
                         {5, 21, 7},   {8, 2, 6},    {9, 13, 7},   {24, 8, 10},  {5, 9, 11},   {1, 10, 12},
                         {11, 27, 13}, {8, 12, 14},  {0, 4, 13},   {0, 16, 29},  {15, 20, 23}, {25, 18, 28},
                         {3, 17, 19},  {18, 26, 23}, {16, 28, 21}, {20, 6, 22},  {26, 21, 29}, {16, 24, 19},
                         {25, 9, 23},  {24, 17, 29}, {27, 19, 22}, {12, 26, 28}, {17, 27, 20}, {25, 22, 15}});
}

/// Loupekine construction on three Petersen blocks. Each block is the
/// Petersen graph minus the path 1-0-4 (7 vertices); the dangling edge of
/// vertex 0 goes to a common centre, and the two dangling edges left by
/// vertex 4 of block i meet those left by vertex 1 of block i+1, crossed
/// when bit i of `twists` is set.
inline CubicGraph loupekine_variant(unsigned twists) {
  const std::array<VertexId, 7> kept{2, 3, 5, 6, 7, 8, 9};
  auto local = [&](int block, VertexId pv) {
    return static_cast<VertexId>(block * 7 + (std::find(kept.begin(), kept.end(), pv) - kept.begin()));
  };
  const VertexId centre = 21;
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int b = 0; b < 3; ++b) {
    for (auto [u, v] : petersen_edges())
      if (std::find(kept.begin(), kept.end(), u) != kept.end() && std::find(kept.begin(), kept.end(), v) != kept.end())
        e.emplace_back(local(b, u), local(b, v));
    e.emplace_back(local(b, 5), centre);
    int nb = (b + 1) % 3;
    bool cross = (twists >> b) & 1u;
    e.emplace_back(local(b, 3), local(nb, cross ? 6 : 2));
    e.emplace_back(local(b, 9), local(nb, cross ? 2 : 6));
  }
  return CubicGraph::from_edges(22, e);
}

/// Representatives of the non-3-edge-colorable Loupekine variants up to
/// isomorphism, in order of first occurrence.
inline std::vector<CubicGraph> loupekine_classes() {
  std::vector<CubicGraph> reps;
  for (unsigned t = 0; t < 8; ++t) {
    CubicGraph g = loupekine_variant(t);
    if (!is_bridgeless(g) || is_three_edge_colorable(g)) continue;
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const CubicGraph& r) { return are_isomorphic(r, g); });
    if (fresh) reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace detail

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"petersen", "flower_j5", "loupekine1", "loupekine2", "double_star"};
  return names;
}

inline CubicGraph fixture(const std::string& name) {
  if (name == "petersen") return CubicGraph::from_edges(10, detail::petersen_edges());
  if (name == "flower_j5") return detail::flower_j5();
  if (name == "double_star") return detail::double_star();
  if (name == "loupekine1" || name == "loupekine2") {
    auto reps = detail::loupekine_classes();
    std::size_t k = name == "loupekine1" ? 0 : 1;
    if (k >= reps.size()) throw Error(ErrorCode::unknown_fixture, "Loupekine construction yielded too few snarks");
    return reps[k];
  }
  throw Error(ErrorCode::unknown_fixture, "unknown fixture '" + name + "'");
}

/// Contracted picture of a two-variable configuration: the two locking
/// cycles and the matching-edge chains joining their vertices once one
/// colour class of every other Tait cycle is deleted and degree-2 vertices
/// are smoothed. Chains joining the two cycles are external, chains
/// returning to the same cycle internal.
struct ChordSystem {
  struct Chord {
    std::array<VertexId, 2> ends{kNoVertex, kNoVertex};  // external: ends[0] on cycles[0]
    std::vector<EdgeId> edges;                           // from ends[0] to ends[1]
  };
  std::array<TaitCycle, 2> cycles;
  std::vector<Chord> external;
  std::vector<Chord> internal;
};

/// A Petersen subdivision: `map[i]` hosts Petersen vertex i (outer 0..4,
/// inner 5..9), `chords` holds the first edge of each spoke chain and
/// `paths[k]` realises Petersen edge k from its first to its second vertex.
struct PetersenWitnessMap {
  std::array<VertexId, 10> map{};
  std::vector<EdgeId> chords;
  std::vector<std::vector<EdgeId>> paths;
};

inline ChordSystem chord_system(const Configuration& cfg) {
  const auto& g = cfg.g();
  auto vars = variables(g, cfg.coloring);
  if (vars.size() != 2)
    throw Error(ErrorCode::wrong_variable_count, "contraction needs exactly two variables, found " + std::to_string(vars.size()));
  int ca = cfg.cycle_of_edge[vars[0].edge], cb = cfg.cycle_of_edge[vars[1].edge];
  if (ca < 0 || cb < 0 || ca == cb)
    throw Error(ErrorCode::precondition, "the two variables must lie on two different Tait cycles");
  if (ca > cb) std::swap(ca, cb);

  ChordSystem cs;
  cs.cycles = {cfg.cycles[static_cast<std::size_t>(ca)], cfg.cycles[static_cast<std::size_t>(cb)]};
  std::vector<int> side(static_cast<std::size_t>(g.vertex_capacity()), -1);
  for (int k = 0; k < 2; ++k)
    for (VertexId v : cs.cycles[static_cast<std::size_t>(k)].vertices) side[v] = k;

  auto matching_edge = [&](VertexId v) {
    for (EdgeId e : g.incident(v))
      if (cfg.matching.contains(e)) return e;
    throw Error(ErrorCode::not_perfect, "vertex " + std::to_string(v) + " is not matched");
  };
  // On other Tait cycles the edges of the first Tait colour are deleted.
  auto kept_edge = [&](VertexId v, EdgeId from) {
    for (EdgeId e : g.incident(v))
      if (e != from && !cfg.matching.contains(e) && cfg.coloring[e][0] == cfg.tait_second) return e;
    throw Error(ErrorCode::precondition, "Tait cycle through vertex " + std::to_string(v) + " is not alternating");
  };

  std::vector<char> used(static_cast<std::size_t>(g.edge_capacity()), 0);
  for (int k = 0; k < 2; ++k)
    for (VertexId x : cs.cycles[static_cast<std::size_t>(k)].vertices) {
      EdgeId e = matching_edge(x);
      if (used[e]) continue;
      ChordSystem::Chord ch;
      ch.ends[0] = x;
      VertexId y = g.other_end(e, x);
      ch.edges.push_back(e);
      used[e] = 1;
      while (side[y] < 0) {
        EdgeId t = kept_edge(y, e);
        VertexId z = g.other_end(t, y);
        e = matching_edge(z);
        ch.edges.push_back(t);
        ch.edges.push_back(e);
        used[e] = 1;
        y = g.other_end(e, z);
      }
      ch.ends[1] = y;
      (side[x] == side[y] ? cs.internal : cs.external).push_back(std::move(ch));
    }
  return cs;
}

/// Searches 5-subsets of external chords whose endpoints interleave like the
/// spokes of the Petersen graph: consecutive chords along the first cycle
/// land two steps apart along the second. Returns the lexicographically
/// smallest vertex map of the first matching subset.
inline std::optional<PetersenWitnessMap> petersen_pattern_match(const ChordSystem& cs) {
  const auto& A = cs.cycles[0];
  const auto& B = cs.cycles[1];
  if (A.length() < 5 || B.length() < 5 || cs.external.size() < 5) return std::nullopt;
  auto pos = [](const TaitCycle& c, VertexId v) {
    return static_cast<int>(std::find(c.vertices.begin(), c.vertices.end(), v) - c.vertices.begin());
  };
  std::vector<std::size_t> by_a(cs.external.size());
  for (std::size_t i = 0; i < by_a.size(); ++i) by_a[i] = i;
  std::sort(by_a.begin(), by_a.end(), [&](std::size_t x, std::size_t y) {
    return pos(A, cs.external[x].ends[0]) < pos(A, cs.external[y].ends[0]);
  });

  // Edges of `c` from position p forward to position q.
  auto arc = [](const TaitCycle& c, int p, int q) {
    std::vector<EdgeId> out;
    const int n = c.length();
    for (int k = p; k != q; k = (k + 1) % n) out.push_back(c.edges[static_cast<std::size_t>(k)]);
    return out;
  };
  // Path from position p to position q along the side free of other chosen positions.
  auto path_between = [&](const TaitCycle& c, int p, int q, const std::array<int, 5>& chosen) {
    const int n = c.length();
    auto fwd_free = [&](int from, int to) {
      for (int k = (from + 1) % n; k != to; k = (k + 1) % n)
        if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) return false;
      return true;
    };
    if (fwd_free(p, q)) return arc(c, p, q);
    auto back = arc(c, q, p);
    std::reverse(back.begin(), back.end());
    return back;
  };

  const std::size_t k = by_a.size();
  std::array<std::size_t, 5> idx{0, 1, 2, 3, 4};
  while (true) {
    std::array<int, 5> pa{}, pb{}, rb{};
    for (int i = 0; i < 5; ++i) {
      const auto& ch = cs.external[by_a[idx[static_cast<std::size_t>(i)]]];
      pa[static_cast<std::size_t>(i)] = pos(A, ch.ends[0]);
      pb[static_cast<std::size_t>(i)] = pos(B, ch.ends[1]);
    }
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) rb[static_cast<std::size_t>(i)] += pb[static_cast<std::size_t>(j)] < pb[static_cast<std::size_t>(i)] ? 1 : 0;
    int d = ((rb[1] - rb[0]) % 5 + 5) % 5;
    bool pattern = d == 2 || d == 3;
    for (int i = 0; i < 5 && pattern; ++i)
      pattern = ((rb[static_cast<std::size_t>((i + 1) % 5)] - rb[static_cast<std::size_t>(i)]) % 5 + 5) % 5 == d;
    if (pattern) {
      std::optional<PetersenWitnessMap> best;
      for (int s = 0; s < 5; ++s)
        for (int dir : {1, -1}) {
          std::array<int, 5> slot{};  // outer vertex i -> index into the chosen five
          for (int i = 0; i < 5; ++i) slot[static_cast<std::size_t>(i)] = ((s + dir * i) % 5 + 5) % 5;
          PetersenWitnessMap w;
          for (int i = 0; i < 5; ++i) {
            const auto& ch = cs.external[by_a[idx[static_cast<std::size_t>(slot[static_cast<std::size_t>(i)])]]];
            w.map[static_cast<std::size_t>(i)] = ch.ends[0];
            w.map[static_cast<std::size_t>(i + 5)] = ch.ends[1];
          }
          if (best && !(w.map < best->map)) continue;
          for (int i = 0; i < 5; ++i) {
            auto si = static_cast<std::size_t>(slot[static_cast<std::size_t>(i)]);
            auto s1 = static_cast<std::size_t>(slot[static_cast<std::size_t>((i + 1) % 5)]);
            auto s2 = static_cast<std::size_t>(slot[static_cast<std::size_t>((i + 2) % 5)]);
            const auto& ch = cs.external[by_a[idx[si]]];
            w.chords.push_back(ch.edges.front());
            w.paths.push_back(path_between(A, pa[si], pa[s1], pa));
            w.paths.push_back(ch.edges);
            w.paths.push_back(path_between(B, pb[si], pb[s2], pb));
          }
          best = std::move(w);
        }
      return best;
    }
    // next 5-subset in lexicographic order
    int i = 4;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - 5 + static_cast<std::size_t>(i)) --i;
    if (i < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < 5; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Contracts a two-variable configuration onto the Petersen pattern.
inline std::optional<PetersenWitnessMap> contract_to_petersen(const Configuration& cfg) {
  return petersen_pattern_match(chord_system(cfg));
}

/// Checks that the witness is a Petersen subdivision of `g`: every path
/// walks from the image of its first vertex to the image of its second,
/// branch vertices are distinct, and no vertex is interior to two paths or
/// interior to a path and a branch vertex.
inline bool is_petersen_subdivision(const CubicGraph& g, const PetersenWitnessMap& w) {
  auto pe = detail::petersen_edges();
  if (w.paths.size() != pe.size()) return false;
  std::vector<int> role(static_cast<std::size_t>(g.vertex_capacity()), 0);  // 1 branch, 2 interior
  for (VertexId v : w.map) {
    if (!g.has_vertex(v) || role[v]) return false;
    role[v] = 1;
  }
  std::vector<char> edge_used(static_cast<std::size_t>(g.edge_capacity()), 0);
  for (std::size_t k = 0; k < pe.size(); ++k) {
    const auto& path = w.paths[k];
    if (path.empty()) return false;
    VertexId at = w.map[static_cast<std::size_t>(pe[k].first)];
    for (std::size_t i = 0; i < path.size(); ++i) {
      EdgeId e = path[i];
      if (!g.has_edge(e) || edge_used[e]) return false;
      edge_used[e] = 1;
      auto [u, v] = g.ends(e);
      if (u != at && v != at) return false;
      at = u == at ? v : u;
      if (i + 1 < path.size()) {
        if (role[at]) return false;
        role[at] = 2;
      }
    }
    if (at != w.map[static_cast<std::size_t>(pe[k].second)]) return false;
  }
  return true;
}

struct ContractionResult {
  Configuration configuration;
  ChordSystem chords;
  PetersenWitnessMap witness;
  std::size_t attempts = 0;
};

struct ContractionLimits {
  std::size_t max_matchings = 1u << 16;
  std::size_t max_attempts = 1u << 14;
};

/// Tries the configurations with exactly two odd Tait cycles, and for each
/// every choice of which colour class to delete on the other cycles, until
/// one contracts onto the Petersen pattern. nullopt is inconclusive.
inline std::optional<ContractionResult> find_petersen_contraction(const CubicGraph& graph, ContractionLimits limits = {}) {
  auto g = std::make_shared<const CubicGraph>(graph);
  auto list = enumerate_perfect_matchings(*g, limits.max_matchings);
  std::size_t attempts = 0;
  for (const auto& m : list.matchings) {
    Configuration cfg = from_matching(g, m);
    if (cfg.tau_odd() != 2) continue;
    std::vector<int> even;
    for (int i = 0; i < cfg.tau(); ++i)
      if (!cfg.cycles[static_cast<std::size_t>(i)].odd()) even.push_back(i);
    const StateKey base = state_key(cfg);
    const std::size_t combos = even.size() >= 20 ? std::size_t{1} << 20 : std::size_t{1} << even.size();
    for (std::size_t bits = 0; bits < combos; ++bits) {
      if (attempts >= limits.max_attempts) return std::nullopt;
      ++attempts;
      StateKey key = base;
      for (std::size_t j = 0; j < even.size(); ++j) key.bits[static_cast<std::size_t>(even[j])] = static_cast<std::int8_t>((bits >> j) & 1u);
      Configuration s = cfg;
      set_state(s, key);
      s.coloring.clear_certificate();
      ChordSystem cs = chord_system(s);
      if (auto w = petersen_pattern_match(cs)) return ContractionResult{std::move(s), std::move(cs), std::move(*w), attempts};
    }
  }
  return std::nullopt;
}

}  // namespace kempe
