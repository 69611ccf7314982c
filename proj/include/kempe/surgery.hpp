#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "kempe/embedding.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Everything needed to undo one delete-and-smooth step.
///
/// A merge replaces a path of original edges through a smoothed vertex by a
/// single edge whose id is the smallest id on the path. Attachments record the
/// far-vertex incidence slots that were rewritten to point at merged ids.
struct SurgeryTrace {
  struct Attachment {
    VertexId vertex = kNoVertex;
    int slot = 0;
    EdgeId merged = kNoEdge;
    EdgeId original = kNoEdge;
  };
  struct Merge {
    EdgeId merged = kNoEdge;
    EdgeEnds merged_ends;
    std::vector<EdgeId> path;  // original edges from merged_ends.first to merged_ends.second
  };

  EdgeId deleted = kNoEdge;
  EdgeEnds deleted_ends;
  bool parallel = false;
  std::array<VertexId, 2> smoothed{kNoVertex, kNoVertex};
  std::array<CubicGraph::Incidence, 2> smoothed_incidence{};
  std::vector<std::pair<EdgeId, EdgeEnds>> original_ends;
  std::vector<Attachment> attachments;
  std::vector<Merge> merges;
};

namespace detail {

inline void check_deletable(const CubicGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw Error(ErrorCode::not_incident, "no edge with id " + std::to_string(e));
  if (g.num_vertices() <= 2) throw Error(ErrorCode::would_create_loop, "graph too small to smooth");
}

}  // namespace detail

/// Removes `e` and smooths both of its endpoints. Incidence slots at the far
/// vertices are rewritten in place, so an embedded graph stays embedded.
inline std::pair<CubicGraph, SurgeryTrace> delete_edge_smooth(const CubicGraph& g, EdgeId e) {
  detail::check_deletable(g, e);
  const auto [u, v] = g.ends(e);

  SurgeryTrace tr;
  tr.deleted = e;
  tr.deleted_ends = g.ends(e);
  tr.smoothed = {u, v};
  tr.smoothed_incidence = {g.incident(u), g.incident(v)};

  CubicGraph out = g;
  auto& ends = detail::GraphEditor::ends(out);
  auto& inc = detail::GraphEditor::incidence(out);

  auto touch = [&](EdgeId id) { tr.original_ends.emplace_back(id, g.ends(id)); };
  auto attach = [&](VertexId far, EdgeId original, EdgeId merged) {
    int slot = g.slot_of(far, original);
    tr.attachments.push_back({far, slot, merged, original});
    inc[far][slot] = merged;
  };

  std::vector<EdgeId> twins;
  for (EdgeId f : g.incident(u))
    if (f != e && g.other_end(f, u) == v) twins.push_back(f);

  touch(e);
  if (twins.size() > 1) throw Error(ErrorCode::would_create_loop, "deleting one edge of a triple bond leaves a loop");

  if (twins.size() == 1) {
    // x - u = v - z with the twin between u and v collapses to a single x - z edge.
    tr.parallel = true;
    EdgeId twin = twins.front();
    EdgeId eu = kNoEdge, ev = kNoEdge;
    for (EdgeId f : g.incident(u))
      if (f != e && f != twin) eu = f;
    for (EdgeId f : g.incident(v))
      if (f != e && f != twin) ev = f;
    VertexId x = g.other_end(eu, u), z = g.other_end(ev, v);
    if (x == z) throw Error(ErrorCode::would_create_loop, "smoothing edge " + std::to_string(e) + " closes a loop at vertex " + std::to_string(x));
    EdgeId merged = std::min({eu, twin, ev});
    for (EdgeId f : {eu, twin, ev}) touch(f);
    for (EdgeId f : {e, eu, twin, ev}) ends[f] = {};
    ends[merged] = {x, z};
    attach(x, eu, merged);
    attach(z, ev, merged);
    tr.merges.push_back({merged, {x, z}, {eu, twin, ev}});
  } else {
    std::array<std::array<EdgeId, 2>, 2> sides{};
    std::array<std::array<VertexId, 2>, 2> fars{};
    for (int k = 0; k < 2; ++k) {
      VertexId w = tr.smoothed[k];
      int idx = g.slot_of(w, e);
      sides[k] = {g.incident(w)[(idx + 1) % 3], g.incident(w)[(idx + 2) % 3]};
      fars[k] = {g.other_end(sides[k][0], w), g.other_end(sides[k][1], w)};
      if (fars[k][0] == fars[k][1])
        throw Error(ErrorCode::would_create_loop,
                    "smoothing vertex " + std::to_string(w) + " merges two edges into a loop at " + std::to_string(fars[k][0]));
    }
    ends[e] = {};
    for (int k = 0; k < 2; ++k) {
      auto [s1, s2] = sides[k];
      EdgeId merged = std::min(s1, s2);
      touch(s1);
      touch(s2);
      ends[s1] = {};
      ends[s2] = {};
      ends[merged] = {fars[k][0], fars[k][1]};
      attach(fars[k][0], s1, merged);
      attach(fars[k][1], s2, merged);
      tr.merges.push_back({merged, {fars[k][0], fars[k][1]}, {s1, s2}});
    }
  }
  inc[u] = {kNoEdge, kNoEdge, kNoEdge};
  inc[v] = {kNoEdge, kNoEdge, kNoEdge};
  detail::GraphEditor::recount(out);
  return {std::move(out), std::move(tr)};
}

/// Inverse of delete_edge_smooth: subdivides the merged host edges again and
/// restores every original id, endpoint and incidence slot.
inline CubicGraph insert_edge(const CubicGraph& g, const SurgeryTrace& tr) {
  auto stale = [](const std::string& why) { return Error(ErrorCode::stale_trace, why); };
  for (VertexId w : tr.smoothed)
    if (w < 0 || w >= g.vertex_capacity() || g.has_vertex(w)) throw stale("vertex " + std::to_string(w) + " is not a free slot");
  if (tr.deleted < 0 || tr.deleted >= g.edge_capacity() || g.has_edge(tr.deleted))
    throw stale("deleted edge " + std::to_string(tr.deleted) + " is not a free slot");
  for (const auto& m : tr.merges) {
    if (!g.has_edge(m.merged) || !(g.ends(m.merged) == m.merged_ends))
      throw stale("host edge " + std::to_string(m.merged) + " changed since deletion");
    for (EdgeId f : m.path)
      if (f != m.merged && g.has_edge(f)) throw stale("edge id " + std::to_string(f) + " was reused");
  }
  for (const auto& a : tr.attachments)
    if (!g.has_vertex(a.vertex) || g.incident(a.vertex)[a.slot] != a.merged)
      throw stale("attachment at vertex " + std::to_string(a.vertex) + " moved");

  CubicGraph out = g;
  auto& ends = detail::GraphEditor::ends(out);
  auto& inc = detail::GraphEditor::incidence(out);
  for (const auto& a : tr.attachments) inc[a.vertex][a.slot] = a.original;
  for (const auto& [id, en] : tr.original_ends) ends[id] = en;
  inc[tr.smoothed[0]] = tr.smoothed_incidence[0];
  inc[tr.smoothed[1]] = tr.smoothed_incidence[1];
  detail::GraphEditor::recount(out);
  return out;
}

/// True iff deleting `e` is legal and leaves a bridgeless graph.
inline bool is_admissible(const CubicGraph& g, EdgeId e) {
  try {
    return is_bridgeless(delete_edge_smooth(g, e).first);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::would_create_loop) return false;
    throw;
  }
}

/// Smallest-id boundary edge of `face` whose deletion keeps the graph bridgeless.
inline EdgeId find_admissible_edge(const CubicGraph& g, const Face& face) {
  auto ids = face.edge_ids();
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (EdgeId e : ids)
    if (is_admissible(g, e)) return e;
  throw Error(ErrorCode::no_admissible_edge, "no boundary edge of the face can be deleted without creating a bridge");
}

}  // namespace kempe
