#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kempe/error.hpp"

namespace kempe {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct EdgeEnds {
  VertexId first = kNoVertex;
  VertexId second = kNoVertex;

  bool operator==(const EdgeEnds&) const = default;
};

/// One half of an edge: the link of `edge` at its endpoint `side`
/// (0 = EdgeEnds::first, 1 = EdgeEnds::second).
struct Link {
  EdgeId edge = kNoEdge;
  int side = 0;

  auto operator<=>(const Link&) const = default;
  Link opposite() const noexcept { return {edge, 1 - side}; }
};

namespace detail {
struct GraphEditor;
}

/// 3-regular loopless multigraph.
///
/// Vertex and edge ids index slot arrays. A freshly built graph has dense ids;
/// surgery kills slots instead of renumbering so that surviving ids stay
/// stable. The per-vertex incidence arrays keep their slot order under
/// surgery, which lets them double as a rotation system for embedded graphs.
class CubicGraph {
 public:
  using Incidence = std::array<EdgeId, 3>;

  CubicGraph() = default;

  /// Validates degree 3 everywhere and rejects loops. Edge ids are the
  /// positions in `edges`; incidence lists are in ascending edge-id order.
  static CubicGraph from_edges(int num_vertices, std::span<const std::pair<VertexId, VertexId>> edges) {
    if (num_vertices < 0) throw Error(ErrorCode::parse_error, "negative vertex count");
    CubicGraph g;
    g.ends_.reserve(edges.size());
    g.incidence_.assign(static_cast<std::size_t>(num_vertices), Incidence{kNoEdge, kNoEdge, kNoEdge});
    std::vector<int> degree(static_cast<std::size_t>(num_vertices), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
        throw Error(ErrorCode::parse_error, "edge " + std::to_string(i) + " has an endpoint out of range");
      if (u == v) throw Error(ErrorCode::loop_edge, "edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(u));
      for (VertexId w : {u, v}) {
        if (degree[w] >= 3)
          throw Error(ErrorCode::not_cubic, "vertex " + std::to_string(w) + " has degree above 3");
        g.incidence_[w][degree[w]++] = static_cast<EdgeId>(i);
      }
      g.ends_.push_back({u, v});
    }
    for (VertexId v = 0; v < num_vertices; ++v)
      if (degree[v] != 3)
        throw Error(ErrorCode::not_cubic,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    g.alive_vertices_ = num_vertices;
    g.alive_edges_ = static_cast<int>(edges.size());
    return g;
  }

  int num_vertices() const noexcept { return alive_vertices_; }
  int num_edges() const noexcept { return alive_edges_; }
  int vertex_capacity() const noexcept { return static_cast<int>(incidence_.size()); }
  int edge_capacity() const noexcept { return static_cast<int>(ends_.size()); }

  bool has_vertex(VertexId v) const noexcept {
    return v >= 0 && v < vertex_capacity() && incidence_[v][0] != kNoEdge;
  }
  bool has_edge(EdgeId e) const noexcept {
    return e >= 0 && e < edge_capacity() && ends_[e].first != kNoVertex;
  }

  const EdgeEnds& ends(EdgeId e) const {
    check_edge(e);
    return ends_[e];
  }
  VertexId endpoint(EdgeId e, int side) const {
    const auto& en = ends(e);
    return side == 0 ? en.first : en.second;
  }
  VertexId endpoint(Link l) const { return endpoint(l.edge, l.side); }

  const Incidence& incident(VertexId v) const {
    check_vertex(v);
    return incidence_[v];
  }

  /// Side (0/1) at which `e` meets `v`.
  int side_of(EdgeId e, VertexId v) const {
    const auto& en = ends(e);
    if (en.first == v) return 0;
    if (en.second == v) return 1;
    throw Error(ErrorCode::not_incident, "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
  }
  Link link(EdgeId e, VertexId v) const { return {e, side_of(e, v)}; }
  VertexId other_end(EdgeId e, VertexId v) const { return endpoint(e, 1 - side_of(e, v)); }

  /// Position of `e` in the incidence array of `v`.
  int slot_of(VertexId v, EdgeId e) const {
    const auto& inc = incident(v);
    for (int i = 0; i < 3; ++i)
      if (inc[i] == e) return i;
    throw Error(ErrorCode::not_incident, "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(alive_vertices_));
    for (VertexId v = 0; v < vertex_capacity(); ++v)
      if (has_vertex(v)) out.push_back(v);
    return out;
  }
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(static_cast<std::size_t>(alive_edges_));
    for (EdgeId e = 0; e < edge_capacity(); ++e)
      if (has_edge(e)) out.push_back(e);
    return out;
  }

  /// Number of edges joining u and v.
  int multiplicity(VertexId u, VertexId v) const {
    int count = 0;
    for (EdgeId e : incident(u))
      if (other_end(e, u) == v) ++count;
    return count;
  }

  bool operator==(const CubicGraph&) const = default;

 private:
  void check_edge(EdgeId e) const {
    if (!has_edge(e)) throw Error(ErrorCode::not_incident, "no edge with id " + std::to_string(e));
  }
  void check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw Error(ErrorCode::not_incident, "no vertex with id " + std::to_string(v));
  }

  std::vector<EdgeEnds> ends_;
  std::vector<Incidence> incidence_;
  int alive_vertices_ = 0;
  int alive_edges_ = 0;

  friend struct detail::GraphEditor;
};

namespace detail {

/// Raw slot access for surgery and generators. Callers restore 3-regularity
/// before handing the graph back out.
struct GraphEditor {
  static std::vector<EdgeEnds>& ends(CubicGraph& g) { return g.ends_; }
  static std::vector<CubicGraph::Incidence>& incidence(CubicGraph& g) { return g.incidence_; }
  static void recount(CubicGraph& g) {
    g.alive_vertices_ = 0;
    g.alive_edges_ = 0;
    for (const auto& inc : g.incidence_)
      if (inc[0] != kNoEdge) ++g.alive_vertices_;
    for (const auto& en : g.ends_)
      if (en.first != kNoVertex) ++g.alive_edges_;
  }
  static void replace_in(CubicGraph::Incidence& inc, EdgeId from, EdgeId to) {
    for (auto& e : inc)
      if (e == from) {
        e = to;
        return;
      }
    throw Error(ErrorCode::stale_trace, "edge " + std::to_string(from) + " missing from incidence list");
  }
};

}  // namespace detail

/// Per-vertex cyclic order of incident edges (indexed by vertex id).
struct RotationSystem {
  std::vector<CubicGraph::Incidence> order;

  bool operator==(const RotationSystem&) const = default;

  /// Successor of `e` in the cyclic order around `v`.
  EdgeId next(VertexId v, EdgeId e) const {
    const auto& o = order.at(static_cast<std::size_t>(v));
    for (int i = 0; i < 3; ++i)
      if (o[i] == e) return o[(i + 1) % 3];
    throw Error(ErrorCode::inconsistent_rotation,
                "edge " + std::to_string(e) + " absent from rotation at vertex " + std::to_string(v));
  }

  /// The graph's own incidence order read as a rotation system.
  static RotationSystem from_incidence(const CubicGraph& g) {
    RotationSystem rot;
    rot.order.assign(static_cast<std::size_t>(g.vertex_capacity()), {kNoEdge, kNoEdge, kNoEdge});
    for (VertexId v : g.vertices()) rot.order[v] = g.incident(v);
    return rot;
  }
};

/// True iff every alive vertex's rotation entry is a permutation of its incidence list.
inline bool rotation_matches(const CubicGraph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) < g.vertex_capacity()) return false;
  for (VertexId v : g.vertices()) {
    auto a = g.incident(v);
    auto b = rot.order[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

inline bool is_connected(const CubicGraph& g) {
  auto verts = g.vertices();
  if (verts.empty()) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_capacity()), 0);
  std::vector<VertexId> stack{verts.front()};
  seen[verts.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == verts.size();
}

/// All cut edges, ascending. Parallel edges are distinguished by id, so a
/// doubled pair is never reported.
inline std::vector<EdgeId> bridges(const CubicGraph& g) {
  const int cap = g.vertex_capacity();
  std::vector<int> disc(static_cast<std::size_t>(cap), -1), low(static_cast<std::size_t>(cap), 0);
  std::vector<EdgeId> out;
  int timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    int next;
  };
  for (VertexId root : g.vertices()) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNoEdge, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < 3) {
        EdgeId e = g.incident(f.v)[f.next++];
        if (e == f.via) continue;
        VertexId w = g.other_end(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_bridgeless(const CubicGraph& g) { return bridges(g).empty(); }

/// Length of a shortest cycle; 2 when parallel edges exist.
inline int girth(const CubicGraph& g) {
  for (VertexId v : g.vertices())
    for (EdgeId e : g.incident(v))
      if (g.multiplicity(v, g.other_end(e, v)) > 1) return 2;
  int best = std::numeric_limits<int>::max();
  const auto cap = static_cast<std::size_t>(g.vertex_capacity());
  std::vector<int> dist(cap);
  std::vector<EdgeId> parent(cap);
  for (VertexId s : g.vertices()) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[s] = 0;
    parent[s] = kNoEdge;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      if (2 * dist[v] >= best) break;
      for (EdgeId e : g.incident(v)) {
        if (e == parent[v]) continue;
        VertexId w = g.other_end(e, v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = e;
          q.push(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

/// Copy with dead slots removed; returns the compacted graph together with
/// old->new vertex and edge maps (-1 for dead slots).
struct CompactedGraph {
  CubicGraph graph;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

inline CompactedGraph compact(const CubicGraph& g) {
  CompactedGraph out;
  out.vertex_map.assign(static_cast<std::size_t>(g.vertex_capacity()), kNoVertex);
  out.edge_map.assign(static_cast<std::size_t>(g.edge_capacity()), kNoEdge);
  VertexId nv = 0;
  for (VertexId v : g.vertices()) out.vertex_map[v] = nv++;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e : g.edges()) {
    out.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(out.vertex_map[g.ends(e).first], out.vertex_map[g.ends(e).second]);
  }
  out.graph = CubicGraph::from_edges(nv, edges);
  // Preserve incidence order so an attached rotation survives compaction.
  auto& inc = detail::GraphEditor::incidence(out.graph);
  for (VertexId v : g.vertices())
    for (int i = 0; i < 3; ++i) inc[out.vertex_map[v]][i] = out.edge_map[g.incident(v)[i]];
  return out;
}

}  // namespace kempe
