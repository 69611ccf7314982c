#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "kempe/graph.hpp"

namespace kempe {

/// A face as the closed walk of darts around it. Dart (e, s) leaves the
/// endpoint at side s along edge e; the next dart leaves the arrival vertex
/// along the rotation successor of e.
struct Face {
  std::vector<Link> boundary;

  int length() const noexcept { return static_cast<int>(boundary.size()); }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(boundary.size());
    for (const auto& d : boundary) out.push_back(d.edge);
    return out;
  }
  /// Vertices in walk order (the tail of each dart).
  std::vector<VertexId> vertices(const CubicGraph& g) const {
    std::vector<VertexId> out;
    out.reserve(boundary.size());
    for (const auto& d : boundary) out.push_back(g.endpoint(d));
    return out;
  }
  bool contains_edge(EdgeId e) const {
    return std::any_of(boundary.begin(), boundary.end(), [e](const Link& d) { return d.edge == e; });
  }
};

/// Faces of the rotation system, ordered by their first dart in
/// (edge id, side) order. Every dart lies on exactly one face.
inline std::vector<Face> enumerate_faces(const CubicGraph& g, const RotationSystem& rot) {
  if (!rotation_matches(g, rot))
    throw Error(ErrorCode::inconsistent_rotation, "rotation does not cover the incidence lists");
  std::vector<std::array<char, 2>> used(static_cast<std::size_t>(g.edge_capacity()), {0, 0});
  std::vector<Face> faces;
  const std::size_t dart_count = 2 * static_cast<std::size_t>(g.num_edges());
  for (EdgeId e : g.edges()) {
    for (int s = 0; s < 2; ++s) {
      if (used[e][s]) continue;
      Face f;
      Link d{e, s};
      while (!used[d.edge][d.side]) {
        used[d.edge][d.side] = 1;
        f.boundary.push_back(d);
        if (f.boundary.size() > dart_count)
          throw Error(ErrorCode::inconsistent_rotation, "face walk does not close");
        VertexId head = g.endpoint(d.opposite());
        EdgeId next = rot.next(head, d.edge);
        d = g.link(next, head);
        if (next == d.edge && g.endpoint(d) != head)
          throw Error(ErrorCode::inconsistent_rotation, "rotation walk left the graph");
      }
      if (!(d == Link{e, s}))
        throw Error(ErrorCode::inconsistent_rotation, "face walk entered a used dart mid-walk");
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

/// v - e + f for the given rotation; 2 exactly for spherical embeddings of
/// connected graphs.
inline int euler_characteristic(const CubicGraph& g, const RotationSystem& rot) {
  return g.num_vertices() - g.num_edges() + static_cast<int>(enumerate_faces(g, rot).size());
}

inline bool is_planar_rotation(const CubicGraph& g, const RotationSystem& rot) {
  return is_connected(g) && euler_characteristic(g, rot) == 2;
}

/// A planar rotation system for a connected graph, or NonPlanar.
///
/// Parallel edges are removed before running the Boyer-Myrvold test and then
/// placed next to their representative so that each doubled pair bounds a
/// digon face.
inline RotationSystem compute_embedding(const CubicGraph& g) {
  using namespace boost;
  using BGraph = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  using BEdge = graph_traits<BGraph>::edge_descriptor;

  if (!is_connected(g)) throw Error(ErrorCode::precondition, "embedding requires a connected graph");

  auto verts = g.vertices();
  std::vector<int> dense(static_cast<std::size_t>(g.vertex_capacity()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) dense[verts[i]] = static_cast<int>(i);

  // Representative (smallest id) per unordered vertex pair; the rest are twins.
  std::map<std::pair<VertexId, VertexId>, EdgeId> representative;
  std::vector<std::pair<EdgeId, EdgeId>> twins;  // (twin, representative)
  BGraph bg(verts.size());
  std::vector<EdgeId> bg_edge_id;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    auto key = std::minmax(u, v);
    auto it = representative.find({key.first, key.second});
    if (it != representative.end()) {
      twins.emplace_back(e, it->second);
      continue;
    }
    representative[{key.first, key.second}] = e;
    auto [be, ok] = add_edge(static_cast<std::size_t>(dense[u]), static_cast<std::size_t>(dense[v]), bg);
    (void)ok;
    put(edge_index, bg, be, static_cast<int>(bg_edge_id.size()));
    bg_edge_id.push_back(e);
  }

  std::vector<std::vector<BEdge>> embedding(num_vertices(bg));
  bool planar = boyer_myrvold_planarity_test(
      boyer_myrvold_params::graph = bg,
      boyer_myrvold_params::embedding = make_iterator_property_map(embedding.begin(), get(vertex_index, bg)));
  if (!planar) throw Error(ErrorCode::non_planar, "graph admits no planar embedding");

  std::vector<std::vector<EdgeId>> cyclic(static_cast<std::size_t>(g.vertex_capacity()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (const BEdge& be : embedding[i]) cyclic[verts[i]].push_back(bg_edge_id[static_cast<std::size_t>(get(edge_index, bg, be))]);

  for (auto [twin, rep] : twins) {
    auto [u, v] = g.ends(rep);
    auto& cu = cyclic[u];
    cu.insert(std::find(cu.begin(), cu.end(), rep), twin);
    auto& cv = cyclic[v];
    cv.insert(std::find(cv.begin(), cv.end(), rep) + 1, twin);
  }

  RotationSystem rot;
  rot.order.assign(static_cast<std::size_t>(g.vertex_capacity()), {kNoEdge, kNoEdge, kNoEdge});
  for (VertexId v : verts) {
    if (cyclic[v].size() != 3) throw Error(ErrorCode::inconsistent_rotation, "embedding lost an incidence");
    std::copy(cyclic[v].begin(), cyclic[v].end(), rot.order[v].begin());
  }
  if (euler_characteristic(g, rot) != 2)
    throw Error(ErrorCode::inconsistent_rotation, "embedding violates Euler's formula");
  return rot;
}

/// Copy of `g` whose incidence arrays follow `rot`, so that surgery (which
/// edits slots in place) keeps the embedding.
inline CubicGraph apply_rotation(CubicGraph g, const RotationSystem& rot) {
  if (!rotation_matches(g, rot))
    throw Error(ErrorCode::inconsistent_rotation, "rotation does not cover the incidence lists");
  auto& inc = detail::GraphEditor::incidence(g);
  for (VertexId v : g.vertices()) inc[v] = rot.order[v];
  return g;
}

/// Shortest face; ties go to the face whose sorted edge ids are
/// lexicographically smallest.
inline Face min_face(const std::vector<Face>& faces) {
  if (faces.empty()) throw Error(ErrorCode::precondition, "no faces");
  const Face* best = nullptr;
  std::vector<EdgeId> best_key;
  for (const auto& f : faces) {
    auto key = f.edge_ids();
    std::sort(key.begin(), key.end());
    if (!best || f.length() < best->length() || (f.length() == best->length() && key < best_key)) {
      best = &f;
      best_key = std::move(key);
    }
  }
  return *best;
}

inline Face min_face(const CubicGraph& g, const RotationSystem& rot) { return min_face(enumerate_faces(g, rot)); }

}  // namespace kempe
