#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/configuration.hpp"
#include "kempe/embedding.hpp"
#include "kempe/petersen.hpp"
#include "kempe/surgery.hpp"

namespace kempe {

/// One level of the descent: the surgery, the face it was taken from (in
/// the larger graph) and the lift applied on the way back up.
struct InductionFrame {
  SurgeryTrace trace;
  Face face;
  int girth_case = 0;  // length of the chosen minimum face
  std::string sub_case;
};

/// A two-variable configuration met during a pentagon lift whose variables
/// fell into different cycles.
struct PetersenEvent {
  int vertices = 0;
  int tau_even = 0;
  std::vector<int> odd_lengths;
  Verdict verdict;
  std::optional<StateCensus> census;
};

struct SolveOptions {
  ReductionPolicy policy;
  std::uint64_t petersen_budget = 5'000'000;
  std::uint64_t census_budget = 0;  // >0: count reducible states of each Petersen configuration
};

struct SolveResult {
  LinkColoring coloring;
  std::vector<InductionFrame> frames;  // in descent order
  std::vector<PetersenEvent> petersen;
  std::uint64_t kempe_walks = 0;
};

/// Raised when a Petersen configuration of a planar graph is found irreducible.
class PostulateViolation : public Error {
 public:
  PostulateViolation(Configuration cfg, PentagonWitness w, Verdict v)
      : Error(ErrorCode::postulate_violation, "irreducible Petersen configuration on a planar graph"),
        configuration(std::move(cfg)),
        witness(std::move(w)),
        verdict(std::move(v)) {}

  Configuration configuration;
  PentagonWitness witness;
  Verdict verdict;
};

namespace detail {

/// First proper coloring of a small graph found by brute force over constant
/// edge colors, or nullopt.
inline std::optional<LinkColoring> brute_force_coloring(const CubicGraph& g) {
  auto edges = g.edges();
  LinkColoring col(g.edge_capacity());
  std::vector<int> digit(edges.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) return is_proper(g, col);
    for (Color x : kColors) {
      col[edges[i]] = {x, x};
      auto [u, v] = g.ends(edges[i]);
      bool clash = false;
      for (VertexId w : {u, v})
        for (EdgeId f : g.incident(w))
          if (f != edges[i] && f < edges[i] && col[f][0] == x) clash = true;
      if (!clash && self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return col;
}

struct Hosts {
  std::array<EdgeId, 2> face_side{kNoEdge, kNoEdge};
  std::array<EdgeId, 2> off_side{kNoEdge, kNoEdge};
  std::array<Color, 2> color{};
};

/// Colors the re-inserted edge `gamma` and the halves of each host: the
/// off-face half keeps the host color, the face half becomes a variable
/// (third color at the new vertex, host color at the far end).
inline void color_insertion(const CubicGraph& g, LinkColoring& col, const SurgeryTrace& tr, const Hosts& h, Color gamma) {
  col[tr.deleted] = {gamma, gamma};
  for (int k = 0; k < 2; ++k) {
    Color alpha = h.color[static_cast<std::size_t>(k)];
    VertexId w = tr.smoothed[static_cast<std::size_t>(k)];
    col[h.off_side[static_cast<std::size_t>(k)]] = {alpha, alpha};
    EdgeId f = h.face_side[static_cast<std::size_t>(k)];
    Color at_new = third(alpha, gamma);
    col.set(g.link(f, w), at_new);
    col.set(g.link(f, g.other_end(f, w)), alpha);
  }
}

inline Hosts hosts_of(const LinkColoring& col, const SurgeryTrace& tr, const Face& face) {
  Hosts h;
  for (int k = 0; k < 2; ++k) {
    const auto& m = tr.merges[static_cast<std::size_t>(k)];
    h.color[static_cast<std::size_t>(k)] = col[m.merged][0];
    EdgeId a = m.path[0], b = m.path[1];
    bool a_on_face = face.contains_edge(a);
    h.face_side[static_cast<std::size_t>(k)] = a_on_face ? a : b;
    h.off_side[static_cast<std::size_t>(k)] = a_on_face ? b : a;
  }
  return h;
}

inline EdgeId fourth_edge(const Face& f, EdgeId x, EdgeId y, EdgeId z) {
  for (const Link& d : f.boundary)
    if (d.edge != x && d.edge != y && d.edge != z) return d.edge;
  throw Error(ErrorCode::precondition, "face has no fourth edge");
}

}  // namespace detail

/// Lifts a proper coloring of the smaller graph `g` to `up = insert_edge(g,
/// frame.trace)`. Returns the proper coloring of `up`.
inline LinkColoring lift_frame(const CubicGraph& g, const CubicGraph& up, LinkColoring col, InductionFrame& fr,
                               const SolveOptions& opt, SolveResult& res) {
  const auto& tr = fr.trace;
  col.resize(up.edge_capacity());

  if (tr.parallel) {
    // x - u = v - z: the outer pieces keep the host color, the two parallel
    // edges take the remaining two colors.
    const auto& m = tr.merges.front();
    Color alpha = col[m.merged][0];
    Color beta = alpha == Color::a ? Color::b : Color::a;
    col[m.path[0]] = {alpha, alpha};
    col[m.path[2]] = {alpha, alpha};
    col[m.path[1]] = {third(alpha, beta), third(alpha, beta)};
    col[tr.deleted] = {beta, beta};
    fr.sub_case = "parallel";
    return col;
  }

  auto h = detail::hosts_of(col, tr, fr.face);
  const VertexId u = tr.smoothed[0], v = tr.smoothed[1];
  switch (fr.girth_case) {
    case 3: {
      // Both hosts meet at the apex; one exchange there fixes both ends.
      VertexId apex = up.other_end(h.face_side[0], u);
      detail::color_insertion(up, col, tr, h, third(h.color[0], h.color[1]));
      exchange(up, col, apex, h.face_side[0], h.face_side[1]);
      fr.sub_case = "triangle";
      return col;
    }
    case 4: {
      EdgeId opposite = detail::fourth_edge(fr.face, tr.deleted, h.face_side[0], h.face_side[1]);
      Color kappa = col[opposite][0];
      if (h.color[0] != h.color[1]) {
        auto cyc = maximal_path_through(g, col, tr.merges[1].merged, h.color[0], h.color[1]);
        if (cyc.contains(tr.merges[0].merged)) {
          detail::color_insertion(up, col, tr, h, kappa);
          col = kempe_walk_eliminate(up, std::move(col), h.face_side[0], h.face_side[1]);
          ++res.kempe_walks;
          fr.sub_case = "split-colors-one-cycle";
          return col;
        }
        negate_in_place(g, col, cyc);
        h.color[1] = h.color[0];
        fr.sub_case = "split-colors-two-cycles";
      } else {
        fr.sub_case = "same-colors";
      }
      detail::color_insertion(up, col, tr, h, third(h.color[0], kappa));
      col = kempe_walk_eliminate(up, std::move(col), h.face_side[0], h.face_side[1]);
      ++res.kempe_walks;
      return col;
    }
    case 5: {
      Color gamma = Color::a;
      while (gamma == h.color[0] || gamma == h.color[1]) gamma = static_cast<Color>(static_cast<int>(gamma) + 1);
      detail::color_insertion(up, col, tr, h, gamma);
      Configuration cfg = from_coloring(up, col, gamma);
      if (cfg.cycle_of_edge[h.face_side[0]] == cfg.cycle_of_edge[h.face_side[1]]) {
        col = kempe_walk_eliminate(up, std::move(col), h.face_side[0], h.face_side[1]);
        ++res.kempe_walks;
        fr.sub_case = "pentagon-one-cycle";
        return col;
      }
      fr.sub_case = "pentagon-two-cycles";
      auto w = witness_on_pentagon(cfg, pentagon_from_face(up, fr.face));
      if (!w) throw Error(ErrorCode::precondition, "pentagon lift produced no Petersen witness");
      PetersenEvent ev;
      ev.vertices = up.num_vertices();
      ev.tau_even = cfg.tau_even();
      ev.odd_lengths = cfg.odd_lengths();
      ev.verdict = reduce_petersen(cfg, *w, opt.policy, opt.petersen_budget);
      if (opt.census_budget > 0) {
        Configuration at_witness = cfg;
        at_witness.coloring = w->state;
        ev.census = count_reducible_states(at_witness, opt.policy, opt.census_budget);
      }
      if (ev.verdict.kind == VerdictKind::irreducible_exhausted) throw PostulateViolation(cfg, *w, ev.verdict);
      if (ev.verdict.kind == VerdictKind::budget_exceeded)
        throw Error(ErrorCode::limits_exceeded, "Petersen configuration undecided within the state budget");
      col = ev.verdict.certificate->apply(up);
      res.petersen.push_back(std::move(ev));
      return col;
    }
    default: break;
  }
  throw Error(ErrorCode::precondition, "no lift for a face of length " + std::to_string(fr.girth_case));
  (void)u;
  (void)v;
}

/// Proper 3-edge coloring of a bridgeless cubic planar graph by deleting an
/// admissible edge of a minimum face down to four vertices and lifting back.
inline SolveResult three_edge_color_planar(const CubicGraph& input, const RotationSystem& rot, const SolveOptions& opt = {}) {
  if (input.num_vertices() < 4) throw Error(ErrorCode::precondition, "need at least four vertices");
  if (!rotation_matches(input, rot)) throw Error(ErrorCode::inconsistent_rotation, "rotation does not match the graph");
  if (!is_planar_rotation(input, rot)) throw Error(ErrorCode::non_planar, "rotation system is not a planar embedding");
  if (!is_bridgeless(input)) throw Error(ErrorCode::bridged, "graph has a bridge");

  SolveResult res;
  std::vector<CubicGraph> levels;
  levels.push_back(apply_rotation(input, rot));
  while (levels.back().num_vertices() > 4) {
    const CubicGraph& cur = levels.back();
    Face f = min_face(cur, RotationSystem::from_incidence(cur));
    EdgeId e = find_admissible_edge(cur, f);
    auto [next, tr] = delete_edge_smooth(cur, e);
    res.frames.push_back({std::move(tr), std::move(f), 0, {}});
    res.frames.back().girth_case = res.frames.back().face.length();
    levels.push_back(std::move(next));
  }

  auto base = detail::brute_force_coloring(levels.back());
  if (!base) throw Error(ErrorCode::not_proper, "four-vertex base has no proper coloring");
  LinkColoring col = std::move(*base);
  for (std::size_t i = res.frames.size(); i-- > 0;) {
    col.clear_certificate();
    col = lift_frame(levels[i + 1], levels[i], std::move(col), res.frames[i], opt, res);
    if (!is_proper(levels[i], col))
      throw Error(ErrorCode::not_proper, "lift at " + std::to_string(levels[i].num_vertices()) + " vertices left the coloring improper");
  }
  col.clear_certificate();
  res.coloring = std::move(col);
  return res;
}

/// Per-face colors 1..4, indexed like enumerate_faces.
struct FaceColoring {
  std::vector<int> colors;
};

/// Tait's construction: label a root face 0 and cross each edge by adding
/// its color in the Klein four-group (a = 01, b = 10, c = 11).
inline FaceColoring four_color_faces(const CubicGraph& g, const RotationSystem& rot, const LinkColoring& col) {
  if (!is_proper(g, col)) throw Error(ErrorCode::not_proper, "face coloring needs a proper edge coloring");
  auto faces = enumerate_faces(g, rot);
  std::vector<std::array<int, 2>> face_of(static_cast<std::size_t>(g.edge_capacity()), {-1, -1});
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Link& d : faces[i].boundary) face_of[d.edge][static_cast<std::size_t>(d.side)] = static_cast<int>(i);
  std::vector<int> label(faces.size(), -1);
  std::deque<int> queue;
  if (!faces.empty()) {
    label[0] = 0;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (const Link& d : faces[static_cast<std::size_t>(f)].boundary) {
      int nb = face_of[d.edge][static_cast<std::size_t>(1 - d.side)];
      int next = label[static_cast<std::size_t>(f)] ^ (static_cast<int>(col[d.edge][0]) + 1);
      if (label[static_cast<std::size_t>(nb)] < 0) {
        label[static_cast<std::size_t>(nb)] = next;
        queue.push_back(nb);
      } else if (label[static_cast<std::size_t>(nb)] != next) {
        throw Error(ErrorCode::not_proper, "face labels disagree across edge " + std::to_string(d.edge));
      }
    }
  }
  FaceColoring out;
  for (int l : label) out.colors.push_back(l + 1);
  return out;
}

/// Number of edges whose two sides carry the same face color.
inline int face_conflicts(const CubicGraph& g, const RotationSystem& rot, const FaceColoring& fc) {
  auto faces = enumerate_faces(g, rot);
  std::vector<std::array<int, 2>> face_of(static_cast<std::size_t>(g.edge_capacity()), {-1, -1});
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Link& d : faces[i].boundary) face_of[d.edge][static_cast<std::size_t>(d.side)] = static_cast<int>(i);
  int bad = 0;
  for (EdgeId e : g.edges())
    if (fc.colors[static_cast<std::size_t>(face_of[e][0])] == fc.colors[static_cast<std::size_t>(face_of[e][1])]) ++bad;
  return bad;
}

struct VerifyReport {
  bool consistent = false;
  std::vector<VertexId> inconsistent_vertices;
  std::vector<VariableEdge> variables;
  bool proper = false;
  std::array<bool, 3> class_is_perfect_matching{};
};

inline VerifyReport verify_coloring(const CubicGraph& g, const LinkColoring& col) {
  VerifyReport r;
  if (col.capacity() < g.edge_capacity()) {
    r.inconsistent_vertices = g.vertices();
    return r;
  }
  r.inconsistent_vertices = inconsistent_vertices(g, col);
  r.consistent = r.inconsistent_vertices.empty();
  r.variables = variables(g, col);
  r.proper = r.consistent && r.variables.empty();
  for (Color x : kColors) {
    std::vector<EdgeId> cls;
    for (EdgeId e : g.edges())
      if (col[e][0] == x && col[e][1] == x) cls.push_back(e);
    r.class_is_perfect_matching[static_cast<std::size_t>(x)] = is_perfect_matching(g, cls);
  }
  return r;
}

}  // namespace kempe
