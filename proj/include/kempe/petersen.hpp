#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "kempe/configuration.hpp"
#include "kempe/embedding.hpp"

namespace kempe {

/// A 5-cycle; `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % 5]`.
struct Pentagon {
  std::array<VertexId, 5> vertices{};
  std::array<EdgeId, 5> edges{};

  bool operator==(const Pentagon&) const = default;
};

inline Pentagon pentagon_from_face(const CubicGraph& g, const Face& f) {
  if (f.length() != 5) throw Error(ErrorCode::precondition, "face is not a pentagon");
  Pentagon p;
  for (std::size_t i = 0; i < 5; ++i) {
    p.vertices[i] = g.endpoint(f.boundary[i]);
    p.edges[i] = f.boundary[i].edge;
  }
  return p;
}

inline std::vector<Pentagon> pentagonal_faces(const CubicGraph& g, const RotationSystem& rot) {
  std::vector<Pentagon> out;
  for (const auto& f : enumerate_faces(g, rot))
    if (f.length() == 5) out.push_back(pentagon_from_face(g, f));
  return out;
}

/// Every 5-cycle of `g`, each listed once starting at its smallest vertex.
inline std::vector<Pentagon> five_cycles(const CubicGraph& g) {
  std::vector<Pentagon> out;
  Pentagon cur;
  auto rec = [&](auto&& self, int depth) -> void {
    VertexId v = cur.vertices[static_cast<std::size_t>(depth - 1)];
    for (EdgeId e : g.incident(v)) {
      if (depth > 1 && e == cur.edges[static_cast<std::size_t>(depth - 2)]) continue;
      VertexId w = g.other_end(e, v);
      cur.edges[static_cast<std::size_t>(depth - 1)] = e;
      if (depth == 5) {
        // Close back to the start; orient so the second vertex is below the last.
        if (w == cur.vertices[0] && cur.vertices[1] < cur.vertices[4]) out.push_back(cur);
        continue;
      }
      if (w <= cur.vertices[0]) continue;
      bool used = false;
      for (int k = 1; k < depth; ++k) used = used || cur.vertices[static_cast<std::size_t>(k)] == w;
      if (used) continue;
      cur.vertices[static_cast<std::size_t>(depth)] = w;
      self(self, depth + 1);
    }
  };
  for (VertexId s : g.vertices()) {
    cur.vertices[0] = s;
    rec(rec, 1);
  }
  return out;
}

/// A state of a two-variable configuration laid out on a pentagon: edges[0]
/// and edges[3] are matching edges, edges[4] is the pentagon's only edge on
/// one locking cycle and edges[1], edges[2] lie on the other. The variables
/// of `state` sit on edges[4] and edges[1].
struct PentagonWitness {
  Pentagon pentagon;
  int single_cycle = -1;
  int double_cycle = -1;
  LinkColoring state;
};

namespace detail {

inline Pentagon relabel(const Pentagon& p, int r, bool reflect) {
  Pentagon q;
  for (int i = 0; i < 5; ++i) {
    if (!reflect) {
      q.vertices[static_cast<std::size_t>(i)] = p.vertices[static_cast<std::size_t>((r + i) % 5)];
      q.edges[static_cast<std::size_t>(i)] = p.edges[static_cast<std::size_t>((r + i) % 5)];
    } else {
      q.vertices[static_cast<std::size_t>(i)] = p.vertices[static_cast<std::size_t>(((r - i) % 5 + 5) % 5)];
      q.edges[static_cast<std::size_t>(i)] = p.edges[static_cast<std::size_t>(((r - i - 1) % 5 + 10) % 5)];
    }
  }
  return q;
}

/// Slides the variable of cycle `i` onto position `target` the short way round.
inline void slide_to(Configuration& cfg, int i, int target) {
  const auto& c = cfg.cycles[static_cast<std::size_t>(i)];
  int j = detail::variable_position(cfg, c);
  const int n = c.length();
  int fwd = ((target - j) % n + n) % n;
  apply_local_step(cfg, SlideVariable{i, fwd <= n - fwd ? fwd : -(n - fwd)});
}

}  // namespace detail

/// Lays the configuration out on `p` if its two matching edges and locking
/// cycles fit the pattern; moves the variables onto the pentagon.
inline std::optional<PentagonWitness> witness_on_pentagon(const Configuration& cfg, const Pentagon& p) {
  const auto& m = cfg.matching;
  for (int r = 0; r < 5; ++r)
    for (bool reflect : {false, true}) {
      Pentagon q = detail::relabel(p, r, reflect);
      if (!m.contains(q.edges[0]) || !m.contains(q.edges[3])) continue;
      int a = cfg.cycle_of_edge[q.edges[4]];
      int b = cfg.cycle_of_edge[q.edges[1]];
      if (a < 0 || b < 0 || a == b || cfg.cycle_of_edge[q.edges[2]] != b) continue;
      if (!cfg.cycles[static_cast<std::size_t>(a)].odd() || !cfg.cycles[static_cast<std::size_t>(b)].odd()) continue;
      Configuration s = cfg;
      s.coloring.clear_certificate();
      detail::slide_to(s, a, s.cycles[static_cast<std::size_t>(a)].index_of(q.edges[4]));
      detail::slide_to(s, b, s.cycles[static_cast<std::size_t>(b)].index_of(q.edges[1]));
      s.coloring.clear_certificate();
      return PentagonWitness{q, a, b, std::move(s.coloring)};
    }
  return std::nullopt;
}

/// First candidate pentagon carrying the two variables of `cfg` as a
/// Petersen configuration.
inline std::optional<PentagonWitness> detect_petersen_configuration(const Configuration& cfg, const std::vector<Pentagon>& candidates) {
  auto vars = variables(cfg.g(), cfg.coloring);
  if (vars.size() != 2) throw Error(ErrorCode::precondition, "Petersen configurations have exactly two variables");
  int a = cfg.cycle_of_edge[vars[0].edge], b = cfg.cycle_of_edge[vars[1].edge];
  if (a < 0 || b < 0 || a == b) return std::nullopt;
  for (const auto& p : candidates)
    if (auto w = witness_on_pentagon(cfg, p)) return w;
  return std::nullopt;
}

inline std::optional<PentagonWitness> detect_petersen_configuration(const Configuration& cfg, const RotationSystem& rot) {
  return detect_petersen_configuration(cfg, pentagonal_faces(cfg.g(), rot));
}

/// The companion configuration: exchanges at the two ends of the matching
/// edge edges[0] turn it into a constant edge of the shared variable color,
/// which becomes the new matching color. The locking cycle through edges[1]
/// is negated first when the two variable links there disagree.
inline Configuration companion_configuration(const Configuration& cfg, const PentagonWitness& w) {
  const auto& g = cfg.g();
  const auto& p = w.pentagon;
  const VertexId v1 = p.vertices[0], v2 = p.vertices[1];
  LinkColoring col = w.state;
  Color x1 = color_at(g, col, p.edges[4], v1);
  Color x2 = color_at(g, col, p.edges[1], v2);
  if (x1 != x2)
    negate_in_place(g, col, maximal_path_through(g, col, p.edges[1], cfg.tait_first, cfg.tait_second));
  exchange(g, col, v1, p.edges[4], p.edges[0]);
  exchange(g, col, v2, p.edges[1], p.edges[0]);
  return from_coloring(cfg.graph, std::move(col), x1);
}

/// Searches a Petersen configuration for a reducible state: first the
/// states with both variables on the pentagon, then the space without
/// even-cycle negations, then the full space, then the companion.
inline Verdict reduce_petersen(const Configuration& cfg, const PentagonWitness& w, ReductionPolicy policy = {},
                               std::uint64_t budget = UINT64_MAX) {
  Verdict v;
  std::set<StateKey> seen;
  bool budget_hit = false;
  auto test = [&](const Configuration& s) {
    if (!seen.insert(state_key(s)).second) return true;
    if (v.states_tested >= budget) {
      budget_hit = true;
      return false;
    }
    ++v.states_tested;
    if (auto cert = is_state_reducible(s)) {
      v.certificate = std::move(cert);
      return false;
    }
    return true;
  };

  Configuration base = cfg;
  base.coloring = w.state;
  const auto& A = base.cycles[static_cast<std::size_t>(w.single_cycle)];
  const auto& B = base.cycles[static_cast<std::size_t>(w.double_cycle)];
  const StateKey start = state_key(base);
  bool go = true;
  for (EdgeId eb : {w.pentagon.edges[1], w.pentagon.edges[2]})
    for (std::int8_t ba : {0, 1})
      for (std::int8_t bb : {0, 1}) {
        if (!go) break;
        StateKey k = start;
        k.positions[static_cast<std::size_t>(w.single_cycle)] = A.index_of(w.pentagon.edges[4]);
        k.bits[static_cast<std::size_t>(w.single_cycle)] = ba;
        k.positions[static_cast<std::size_t>(w.double_cycle)] = B.index_of(eb);
        k.bits[static_cast<std::size_t>(w.double_cycle)] = bb;
        Configuration s = base;
        set_state(s, k);
        s.coloring.clear_certificate();
        go = test(s);
      }
  if (go && !policy.include_even_ab_negations) go = detail::traverse_states(base, false, test) && !v.certificate;
  if (go && base.tau_even() > 0) {
    v.escalated = !policy.include_even_ab_negations;
    go = detail::traverse_states(base, true, test) && !v.certificate;
  }
  if (v.certificate) {
    v.kind = VerdictKind::reduced;
    return v;
  }
  if (budget_hit) {
    v.kind = VerdictKind::budget_exceeded;
    return v;
  }
  Configuration comp = companion_configuration(cfg, w);
  Verdict cv = is_configuration_reducible(comp, {true}, budget - v.states_tested);
  v.states_tested += cv.states_tested;
  v.notes.push_back("companion states tested: " + std::to_string(cv.states_tested));
  if (cv.reduced()) {
    v.kind = VerdictKind::reduced;
    v.certificate = std::move(cv.certificate);
    v.via_companion = true;
    v.companion_discrepancy = true;
    v.notes.push_back("configuration irreducible but its companion is reducible");
  } else {
    v.kind = cv.kind;
  }
  return v;
}

}  // namespace kempe
