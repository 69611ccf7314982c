#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"

namespace kempe {

using BigInt = boost::multiprecision::cpp_int;

/// One cycle of the complement of the matching. `edges[i]` joins
/// `vertices[i]` and `vertices[i + 1]` (cyclically); `vertices[0]` is the
/// smallest vertex and `edges[0]` the smaller-id cycle edge at it.
struct TaitCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const noexcept { return static_cast<int>(edges.size()); }
  bool odd() const noexcept { return length() % 2 == 1; }
  int index_of(EdgeId e) const {
    auto it = std::find(edges.begin(), edges.end(), e);
    return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
  }
};

/// A matching-induced coloring of a cubic graph. Matching edges carry the
/// matching color on both links; the other two colors (the Tait colors)
/// alternate around the cycles of the complement.
struct Configuration {
  std::shared_ptr<const CubicGraph> graph;
  Color matching_color = Color::c;
  Color tait_first = Color::a;
  Color tait_second = Color::b;
  Matching matching;
  std::vector<TaitCycle> cycles;
  std::vector<int> cycle_of_edge;  // -1 for matching edges and dead slots
  LinkColoring coloring;

  const CubicGraph& g() const { return *graph; }
  int tau() const noexcept { return static_cast<int>(cycles.size()); }
  int tau_odd() const {
    return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const TaitCycle& c) { return c.odd(); }));
  }
  int tau_even() const { return tau() - tau_odd(); }
  std::vector<int> odd_lengths() const {
    std::vector<int> out;
    for (const auto& c : cycles)
      if (c.odd()) out.push_back(c.length());
    return out;
  }
  Color other_tait(Color x) const { return x == tait_first ? tait_second : tait_first; }
};

/// Cycles of the 2-factor complementary to `m`, each in canonical orientation,
/// ordered by smallest vertex.
inline std::vector<TaitCycle> tait_cycles(const CubicGraph& g, const Matching& m) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_capacity()), 0);
  std::vector<TaitCycle> out;
  auto cycle_edges = [&](VertexId v) {
    std::vector<EdgeId> es;
    for (EdgeId e : g.incident(v))
      if (!m.contains(e)) es.push_back(e);
    std::sort(es.begin(), es.end());
    return es;
  };
  for (VertexId v0 : g.vertices()) {
    if (seen[v0]) continue;
    TaitCycle c;
    VertexId v = v0;
    EdgeId e = cycle_edges(v0).front();
    do {
      seen[v] = 1;
      c.vertices.push_back(v);
      c.edges.push_back(e);
      VertexId w = g.other_end(e, v);
      auto es = cycle_edges(w);
      e = es[0] == e ? es[1] : es[0];
      v = w;
    } while (v != v0);
    out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

inline std::pair<Color, Color> tait_colors(Color m) {
  switch (m) {
    case Color::a: return {Color::b, Color::c};
    case Color::b: return {Color::a, Color::c};
    default: return {Color::a, Color::b};
  }
}

inline void index_cycles(Configuration& cfg) {
  cfg.cycle_of_edge.assign(static_cast<std::size_t>(cfg.g().edge_capacity()), -1);
  for (std::size_t i = 0; i < cfg.cycles.size(); ++i)
    for (EdgeId e : cfg.cycles[i].edges) cfg.cycle_of_edge[e] = static_cast<int>(i);
}

}  // namespace detail

/// Canonical initial state: alternate the first and second Tait color around
/// each cycle starting at its smallest vertex; an odd cycle carries its only
/// variable on the closing edge.
inline Configuration from_matching(std::shared_ptr<const CubicGraph> g, const Matching& m, Color matching_color = Color::c) {
  if (!is_perfect_matching(*g, m.edges)) throw Error(ErrorCode::not_perfect, "edge set is not a perfect matching");
  Configuration cfg;
  cfg.graph = std::move(g);
  cfg.matching_color = matching_color;
  std::tie(cfg.tait_first, cfg.tait_second) = detail::tait_colors(matching_color);
  cfg.matching = m;
  cfg.cycles = tait_cycles(cfg.g(), m);
  detail::index_cycles(cfg);
  cfg.coloring = LinkColoring(cfg.g().edge_capacity());
  for (EdgeId e : m.edges) cfg.coloring[e] = {matching_color, matching_color};
  for (const auto& c : cfg.cycles) {
    for (int i = 0; i < c.length(); ++i) {
      Color x = i % 2 == 0 ? cfg.tait_first : cfg.tait_second;
      cfg.coloring[c.edges[static_cast<std::size_t>(i)]] = {x, x};
    }
    if (c.odd()) cfg.coloring.set(cfg.g().link(c.edges.back(), c.vertices.front()), cfg.tait_second);
  }
  return cfg;
}

inline Configuration from_matching(const CubicGraph& g, const Matching& m, Color matching_color = Color::c) {
  return from_matching(std::make_shared<const CubicGraph>(g), m, matching_color);
}

/// Reads a configuration off a consistent coloring in which every link of
/// `matching_color` lies on a constant edge.
inline Configuration from_coloring(std::shared_ptr<const CubicGraph> g, LinkColoring col, Color matching_color) {
  if (!is_consistent(*g, col)) throw Error(ErrorCode::precondition, "coloring is not consistent");
  Matching m;
  for (EdgeId e : g->edges()) {
    bool first = col[e][0] == matching_color, second = col[e][1] == matching_color;
    if (first != second)
      throw Error(ErrorCode::precondition, "edge " + std::to_string(e) + " is a variable involving the matching color");
    if (first) m.edges.push_back(e);
  }
  if (!is_perfect_matching(*g, m.edges)) throw Error(ErrorCode::not_perfect, "matching-colored edges do not form a perfect matching");
  Configuration cfg;
  cfg.graph = std::move(g);
  cfg.matching_color = matching_color;
  std::tie(cfg.tait_first, cfg.tait_second) = detail::tait_colors(matching_color);
  cfg.matching = std::move(m);
  cfg.cycles = tait_cycles(cfg.g(), cfg.matching);
  detail::index_cycles(cfg);
  cfg.coloring = std::move(col);
  return cfg;
}

inline Configuration from_coloring(const CubicGraph& g, LinkColoring col, Color matching_color) {
  return from_coloring(std::make_shared<const CubicGraph>(g), std::move(col), matching_color);
}

/// Per cycle: the Tait color of the first edge's link at the first vertex
/// (0 = first Tait color) and the position of the cycle's variable (-1 if none).
struct StateKey {
  std::vector<std::int8_t> bits;
  std::vector<int> positions;

  auto operator<=>(const StateKey&) const = default;
};

inline StateKey state_key(const Configuration& cfg) {
  StateKey k;
  for (const auto& c : cfg.cycles) {
    Color x = cfg.coloring.at(cfg.g().link(c.edges.front(), c.vertices.front()));
    k.bits.push_back(x == cfg.tait_first ? 0 : 1);
    int pos = -1;
    for (int i = 0; i < c.length() && pos < 0; ++i)
      if (cfg.coloring.is_variable(c.edges[static_cast<std::size_t>(i)])) pos = i;
    k.positions.push_back(pos);
  }
  return k;
}

/// Writes the state described by `key` onto the cycles of `cfg`. Odd cycles
/// need a variable position, even cycles must have none.
inline void set_state(Configuration& cfg, const StateKey& key) {
  if (key.bits.size() != cfg.cycles.size() || key.positions.size() != cfg.cycles.size())
    throw Error(ErrorCode::bad_move_target, "state key does not match the cycle count");
  const auto& g = cfg.g();
  for (std::size_t i = 0; i < cfg.cycles.size(); ++i) {
    const auto& c = cfg.cycles[i];
    const int n = c.length();
    const int j = key.positions[i];
    if (c.odd() != (j >= 0) || j >= n) throw Error(ErrorCode::bad_move_target, "bad variable position for cycle " + std::to_string(i));
    const Color x = key.bits[i] ? cfg.tait_second : cfg.tait_first;
    const Color ox = cfg.other_tait(x);
    auto put = [&](int k, Color at_start, Color at_end) {
      EdgeId e = c.edges[static_cast<std::size_t>(k)];
      cfg.coloring.set(g.link(e, c.vertices[static_cast<std::size_t>(k)]), at_start);
      cfg.coloring.set(g.link(e, c.vertices[static_cast<std::size_t>((k + 1) % n)]), at_end);
    };
    if (j < 0) {
      for (int k = 0; k < n; ++k) put(k, k % 2 == 0 ? x : ox, k % 2 == 0 ? x : ox);
      continue;
    }
    for (int k = 0; k < j; ++k) put(k, k % 2 == 0 ? x : ox, k % 2 == 0 ? x : ox);
    for (int k = n - 1; k > j; --k) {
      Color y = (n - 1 - k) % 2 == 0 ? ox : x;
      put(k, y, y);
    }
    Color start = j % 2 == 0 ? x : ox;
    Color next = j == n - 1 ? x : ((n - 2 - j) % 2 == 0 ? ox : x);
    put(j, start, cfg.other_tait(next));
  }
}

/// 2^tau times the product of the odd cycle lengths.
inline BigInt state_count(const Configuration& cfg) {
  BigInt n = 1;
  for (const auto& c : cfg.cycles) n *= c.odd() ? 2 * c.length() : 2;
  return n;
}

/// Size of the space that never negates even cycles: 2^tau_o times the odd lengths.
inline BigInt reduced_state_count(const Configuration& cfg) {
  BigInt n = 1;
  for (const auto& c : cfg.cycles)
    if (c.odd()) n *= 2 * c.length();
  return n;
}

struct NegateAbCycle {
  int cycle = 0;
};
struct SlideVariable {
  int cycle = 0;
  int steps = 1;  // negative slides run against the cycle orientation
};
using LocalMove = std::variant<NegateAbCycle, SlideVariable>;

namespace detail {

inline const TaitCycle& move_target(const Configuration& cfg, int i) {
  if (i < 0 || i >= cfg.tau()) throw Error(ErrorCode::bad_move_target, "no Tait cycle with index " + std::to_string(i));
  return cfg.cycles[static_cast<std::size_t>(i)];
}

inline int variable_position(const Configuration& cfg, const TaitCycle& c) {
  for (int k = 0; k < c.length(); ++k)
    if (cfg.coloring.is_variable(c.edges[static_cast<std::size_t>(k)])) return k;
  return -1;
}

}  // namespace detail

inline void apply_local_step(Configuration& cfg, const LocalMove& move) {
  const auto& g = cfg.g();
  if (const auto* neg = std::get_if<NegateAbCycle>(&move)) {
    const auto& c = detail::move_target(cfg, neg->cycle);
    negate_in_place(g, cfg.coloring, maximal_path_through(g, cfg.coloring, c.edges.front(), cfg.tait_first, cfg.tait_second));
    return;
  }
  const auto& slide = std::get<SlideVariable>(move);
  const auto& c = detail::move_target(cfg, slide.cycle);
  int j = detail::variable_position(cfg, c);
  if (j < 0) throw Error(ErrorCode::bad_move_target, "cycle " + std::to_string(slide.cycle) + " holds no variable");
  const int n = c.length();
  auto E = [&](int k) { return c.edges[static_cast<std::size_t>(((k % n) + n) % n)]; };
  auto V = [&](int k) { return c.vertices[static_cast<std::size_t>(((k % n) + n) % n)]; };
  for (int s = 0; s < slide.steps; ++s, j = (j + 1) % n) exchange(g, cfg.coloring, V(j + 1), E(j), E(j + 1));
  for (int s = 0; s < -slide.steps; ++s, j = (j - 1 + n) % n) exchange(g, cfg.coloring, V(j), E(j), E(j - 1));
}

inline Configuration local_step(Configuration cfg, const LocalMove& move) {
  apply_local_step(cfg, move);
  return cfg;
}

enum class Essentiality { untested, essential, nonessential };

inline std::string to_string(Essentiality e) {
  switch (e) {
    case Essentiality::essential: return "essential";
    case Essentiality::nonessential: return "nonessential";
    default: return "untested";
  }
}

struct ResolutionCycle {
  KempePath path;
  Essentiality tag = Essentiality::untested;
};

/// The maximal two-colored subgraphs of a state, sorted into five kinds.
struct Decomposition {
  std::vector<KempePath> locking_cycles;
  std::vector<KempePath> even_ab_cycles;
  std::vector<KempePath> exclusive_chains;
  std::vector<ResolutionCycle> resolution_cycles;
  std::vector<KempePath> other_cycles;  // even mixed cycles away from every locking cycle

  /// Every link of `g` lies on exactly two of the listed subgraphs.
  bool covers_links_twice(const CubicGraph& g) const {
    std::vector<int> count(2 * static_cast<std::size_t>(g.edge_capacity()), 0);
    auto add = [&](const KempePath& p) {
      for (const Link& l : p.links) ++count[2 * static_cast<std::size_t>(l.edge) + static_cast<std::size_t>(l.side)];
    };
    for (const auto* list : {&locking_cycles, &even_ab_cycles, &exclusive_chains, &other_cycles})
      for (const auto& p : *list) add(p);
    for (const auto& r : resolution_cycles) add(r.path);
    for (EdgeId e : g.edges())
      for (int s = 0; s < 2; ++s)
        if (count[2 * static_cast<std::size_t>(e) + static_cast<std::size_t>(s)] != 2) return false;
    return true;
  }
};

namespace detail {

inline bool cycle_order(const KempePath& x, const KempePath& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  auto a = x.edges(), b = y.edges();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a < b;
}

inline bool shares_link(const KempePath& p, const std::vector<char>& marked) {
  return std::any_of(p.links.begin(), p.links.end(), [&](const Link& l) {
    return marked[2 * static_cast<std::size_t>(l.edge) + static_cast<std::size_t>(l.side)] != 0;
  });
}

}  // namespace detail

struct ReductionCertificate;
inline std::optional<ReductionCertificate> essential_certificate(const Configuration& cfg, const KempePath& cycle);

inline Decomposition decompose(const Configuration& cfg, bool test_essentiality = false);

/// Replayable record of one variable-pair elimination.
struct ReductionCertificate {
  std::optional<KempePath> resolution_cycle;
  StateKey initial_key;
  LinkColoring initial;  // state the ops apply to (empty log)
  Certificate ops;
  std::pair<EdgeId, EdgeId> eliminated{kNoEdge, kNoEdge};

  LinkColoring apply(const CubicGraph& g) const { return replay(g, initial, ops); }
};

namespace detail {

/// First variable (in edge order) whose nearest variable along its own
/// maximal subgraph carries the same color pair, with that neighbour.
inline std::optional<std::pair<EdgeId, EdgeId>> co_path_pair(const CubicGraph& g, const LinkColoring& col) {
  for (const auto& v : variables(g, col)) {
    auto p = maximal_path_through(g, col, v.edge, v.first, v.second);
    auto pair = std::minmax(v.first, v.second);
    auto E = p.edges();
    const int n = static_cast<int>(E.size());
    const int at = static_cast<int>(std::find(E.begin(), E.end(), v.edge) - E.begin());
    for (int dir : {1, -1}) {
      for (int k = 1; k < n; ++k) {
        int i = at + dir * k;
        if (p.is_cycle())
          i = ((i % n) + n) % n;
        else if (i < 0 || i >= n)
          break;
        EdgeId e = E[static_cast<std::size_t>(i)];
        if (!col.is_variable(e)) continue;
        if (e != v.edge && std::minmax(col[e][0], col[e][1]) == pair) return std::pair{v.edge, e};
        break;
      }
    }
  }
  return std::nullopt;
}

inline ReductionCertificate walk_certificate(const Configuration& cfg, LinkColoring start, std::optional<KempePath> cycle) {
  ReductionCertificate cert;
  cert.initial_key = state_key(cfg);
  cert.initial = cfg.coloring;
  cert.initial.clear_certificate();
  cert.resolution_cycle = std::move(cycle);
  auto pair = co_path_pair(cfg.g(), start);
  auto done = kempe_walk_eliminate(cfg.g(), std::move(start), pair->first, pair->second);
  cert.ops = done.certificate();
  cert.eliminated = *pair;
  return cert;
}

}  // namespace detail

inline Decomposition decompose(const Configuration& cfg, bool test_essentiality) {
  const auto& g = cfg.g();
  const Color p = cfg.tait_first, q = cfg.tait_second, m = cfg.matching_color;
  Decomposition d;
  std::vector<char> locked(2 * static_cast<std::size_t>(g.edge_capacity()), 0);
  for (auto& path : maximal_paths(g, cfg.coloring, p, q)) {
    if (!path.is_cycle())
      d.exclusive_chains.push_back(std::move(path));
    else if (path.length() % 2 == 1) {
      for (const Link& l : path.links) locked[2 * static_cast<std::size_t>(l.edge) + static_cast<std::size_t>(l.side)] = 1;
      d.locking_cycles.push_back(std::move(path));
    } else
      d.even_ab_cycles.push_back(std::move(path));
  }
  for (Color t : {p, q})
    for (auto& path : maximal_paths(g, cfg.coloring, t, m)) {
      if (!path.is_cycle())
        d.exclusive_chains.push_back(std::move(path));
      else if (detail::shares_link(path, locked))
        d.resolution_cycles.push_back({std::move(path), Essentiality::untested});
      else
        d.other_cycles.push_back(std::move(path));
    }
  std::stable_sort(d.resolution_cycles.begin(), d.resolution_cycles.end(),
                   [](const ResolutionCycle& x, const ResolutionCycle& y) { return detail::cycle_order(x.path, y.path); });
  if (test_essentiality)
    for (auto& r : d.resolution_cycles)
      r.tag = essential_certificate(cfg, r.path) ? Essentiality::essential : Essentiality::nonessential;
  return d;
}

/// Negates `cycle` on a scratch copy; if two variables then share a maximal
/// subgraph, returns the negation-plus-walk certificate.
inline std::optional<ReductionCertificate> essential_certificate(const Configuration& cfg, const KempePath& cycle) {
  const auto& g = cfg.g();
  const Color m = cfg.matching_color;
  bool mixed = (cycle.first == m) != (cycle.second == m);
  if (!cycle.is_cycle() || !mixed)
    throw Error(ErrorCode::not_resolution_cycle, "resolution cycles are closed and pair a Tait color with the matching color");
  LinkColoring scratch = cfg.coloring;
  scratch.clear_certificate();
  try {
    negate_in_place(g, scratch, cycle);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_maximal) throw Error(ErrorCode::not_resolution_cycle, e.what());
    throw;
  }
  if (!detail::co_path_pair(g, scratch)) return std::nullopt;
  return detail::walk_certificate(cfg, std::move(scratch), cycle);
}

inline bool is_essential(const Configuration& cfg, const KempePath& cycle) {
  return essential_certificate(cfg, cycle).has_value();
}

/// Certificate for the current state, or nullopt when no resolution cycle is
/// essential. Variables already sharing a subgraph are walked directly.
inline std::optional<ReductionCertificate> is_state_reducible(const Configuration& cfg) {
  const auto& g = cfg.g();
  if (variable_count(g, cfg.coloring) < 2) throw Error(ErrorCode::precondition, "state has fewer than two variables");
  if (detail::co_path_pair(g, cfg.coloring)) {
    LinkColoring start = cfg.coloring;
    start.clear_certificate();
    return detail::walk_certificate(cfg, std::move(start), std::nullopt);
  }
  for (const auto& r : decompose(cfg).resolution_cycles)
    if (auto cert = essential_certificate(cfg, r.path)) return cert;
  return std::nullopt;
}

enum class VerdictKind { reduced, irreducible_exhausted, budget_exceeded };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::reduced: return "Reduced";
    case VerdictKind::irreducible_exhausted: return "IrreducibleExhausted";
    default: return "BudgetExceeded";
  }
}

struct Verdict {
  VerdictKind kind = VerdictKind::irreducible_exhausted;
  std::uint64_t states_tested = 0;
  std::optional<ReductionCertificate> certificate;
  bool via_companion = false;
  bool companion_discrepancy = false;
  bool escalated = false;
  std::vector<std::string> notes;

  bool reduced() const noexcept { return kind == VerdictKind::reduced; }
};

struct ReductionPolicy {
  bool include_even_ab_negations = false;
};

namespace detail {

/// Visits every state reachable by local steps from `cfg`'s current state
/// using an odometer: an odd cycle's digit advances by one slide (period
/// 2n), an even cycle's digit by one negation (period 2). Stops when `visit`
/// returns false; returns whether the space was exhausted.
template <class Visit>
bool traverse_states(Configuration cfg, bool include_even, Visit&& visit) {
  struct Digit {
    int cycle;
    int period;
    int value = 0;
  };
  std::vector<Digit> digits;
  for (int i = 0; i < cfg.tau(); ++i) {
    const auto& c = cfg.cycles[static_cast<std::size_t>(i)];
    if (c.odd())
      digits.push_back({i, 2 * c.length()});
    else if (include_even)
      digits.push_back({i, 2});
  }
  cfg.coloring.clear_certificate();
  if (!visit(static_cast<const Configuration&>(cfg))) return false;
  while (true) {
    std::size_t d = 0;
    for (; d < digits.size(); ++d) {
      auto& dg = digits[d];
      if (cfg.cycles[static_cast<std::size_t>(dg.cycle)].odd())
        apply_local_step(cfg, SlideVariable{dg.cycle, 1});
      else
        apply_local_step(cfg, NegateAbCycle{dg.cycle});
      if (++dg.value < dg.period) break;
      dg.value = 0;
    }
    if (d == digits.size()) return true;
    cfg.coloring.clear_certificate();
    if (!visit(static_cast<const Configuration&>(cfg))) return false;
  }
}

}  // namespace detail

/// Walks the state space (the full one when even-cycle negations are
/// included) and stops at the first reducible state.
inline Verdict is_configuration_reducible(const Configuration& cfg, ReductionPolicy policy = {}, std::uint64_t budget = UINT64_MAX) {
  if (variable_count(cfg.g(), cfg.coloring) < 2) throw Error(ErrorCode::precondition, "configuration has fewer than two variables");
  Verdict v;
  bool budget_hit = false;
  bool exhausted = detail::traverse_states(cfg, policy.include_even_ab_negations, [&](const Configuration& s) {
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
  });
  if (v.certificate)
    v.kind = VerdictKind::reduced;
  else if (budget_hit || !exhausted)
    v.kind = VerdictKind::budget_exceeded;
  else
    v.kind = VerdictKind::irreducible_exhausted;
  return v;
}

struct StateCensus {
  std::uint64_t tested = 0;
  std::uint64_t reducible = 0;
  bool exhausted = false;
};

/// Counts reducible states (up to `budget` states tested).
inline StateCensus count_reducible_states(const Configuration& cfg, ReductionPolicy policy = {}, std::uint64_t budget = UINT64_MAX) {
  StateCensus census;
  census.exhausted = detail::traverse_states(cfg, policy.include_even_ab_negations, [&](const Configuration& s) {
    if (census.tested >= budget) return false;
    ++census.tested;
    if (is_state_reducible(s)) ++census.reducible;
    return true;
  });
  return census;
}

/// Negates an even mixed cycle, moving to the configuration of a different
/// perfect matching with the same variables.
inline Configuration global_step(const Configuration& cfg, const KempePath& cycle) {
  const Color m = cfg.matching_color;
  if ((cycle.first == m) == (cycle.second == m))
    throw Error(ErrorCode::bad_move_target, "global steps negate cycles pairing a Tait color with the matching color");
  if (!cycle.is_cycle()) throw Error(ErrorCode::exclusive_chain, "negating an exclusive chain retypes its end variables");
  if (cycle.length() % 2 == 1) throw Error(ErrorCode::odd_cycle, "negating an odd cycle would strand a variable");
  LinkColoring col = cfg.coloring;
  negate_in_place(cfg.g(), col, cycle);
  return from_coloring(cfg.graph, std::move(col), m);
}

/// Even mixed cycles of the current state (resolution cycles first).
inline std::vector<KempePath> global_step_candidates(const Configuration& cfg) {
  auto d = decompose(cfg);
  std::vector<KempePath> out;
  for (auto& r : d.resolution_cycles)
    if (r.path.length() % 2 == 0) out.push_back(std::move(r.path));
  for (auto& p : d.other_cycles)
    if (p.length() % 2 == 0) out.push_back(std::move(p));
  return out;
}

}  // namespace kempe
