#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

enum class Color : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::array<Color, 3> kColors{Color::a, Color::b, Color::c};

/// The color different from both `x` and `y` (which must differ).
constexpr Color third(Color x, Color y) noexcept {
  return static_cast<Color>(3 - static_cast<int>(x) - static_cast<int>(y));
}

constexpr char to_char(Color x) noexcept { return static_cast<char>('a' + static_cast<int>(x)); }

inline Color parse_color(char ch) {
  if (ch < 'a' || ch > 'c') throw Error(ErrorCode::parse_error, std::string("unknown color '") + ch + "'");
  return static_cast<Color>(ch - 'a');
}

/// Unordered color pair written in alphabetical order, e.g. "ac".
inline std::string pair_name(Color x, Color y) {
  if (y < x) std::swap(x, y);
  return {to_char(x), to_char(y)};
}

/// Colors of an edge's two links in EdgeEnds order.
using EdgeColors = std::array<Color, 2>;

struct Exchange {
  VertexId vertex = kNoVertex;
  EdgeId first = kNoEdge;
  EdgeId second = kNoEdge;

  bool operator==(const Exchange&) const = default;
};

struct Negation {
  Color first = Color::a;  // alphabetical
  Color second = Color::b;
  std::vector<Link> links;

  bool operator==(const Negation&) const = default;
};

using CertificateOp = std::variant<Exchange, Negation>;
using Certificate = std::vector<CertificateOp>;

/// Per-link coloring indexed by edge id, plus the append-only log of every
/// exchange and negation applied through this library.
class LinkColoring {
 public:
  LinkColoring() = default;
  explicit LinkColoring(int edge_capacity, Color fill = Color::a)
      : links_(static_cast<std::size_t>(edge_capacity), EdgeColors{fill, fill}) {}

  int capacity() const noexcept { return static_cast<int>(links_.size()); }
  void resize(int edge_capacity, Color fill = Color::a) {
    links_.resize(static_cast<std::size_t>(edge_capacity), EdgeColors{fill, fill});
  }

  const EdgeColors& operator[](EdgeId e) const { return links_.at(static_cast<std::size_t>(e)); }
  EdgeColors& operator[](EdgeId e) { return links_.at(static_cast<std::size_t>(e)); }

  Color at(Link l) const { return (*this)[l.edge][static_cast<std::size_t>(l.side)]; }
  void set(Link l, Color x) { (*this)[l.edge][static_cast<std::size_t>(l.side)] = x; }
  bool is_variable(EdgeId e) const { return (*this)[e][0] != (*this)[e][1]; }

  const std::vector<EdgeColors>& links() const noexcept { return links_; }
  const Certificate& certificate() const noexcept { return certificate_; }
  void record(CertificateOp op) { certificate_.push_back(std::move(op)); }
  void clear_certificate() noexcept { certificate_.clear(); }

  /// Link-wise equality; certificates are ignored.
  bool same_links(const LinkColoring& other) const { return links_ == other.links_; }

 private:
  std::vector<EdgeColors> links_;
  Certificate certificate_;
};

inline Color color_at(const CubicGraph& g, const LinkColoring& col, EdgeId e, VertexId v) {
  return col.at(g.link(e, v));
}

/// The link at `v` carrying color `x`, if any.
inline std::optional<Link> link_with_color(const CubicGraph& g, const LinkColoring& col, VertexId v, Color x) {
  for (EdgeId e : g.incident(v)) {
    Link l = g.link(e, v);
    if (col.at(l) == x) return l;
  }
  return std::nullopt;
}

inline std::vector<VertexId> inconsistent_vertices(const CubicGraph& g, const LinkColoring& col) {
  std::vector<VertexId> bad;
  for (VertexId v : g.vertices()) {
    std::array<int, 3> seen{};
    for (EdgeId e : g.incident(v)) ++seen[static_cast<std::size_t>(color_at(g, col, e, v))];
    if (seen != std::array<int, 3>{1, 1, 1}) bad.push_back(v);
  }
  return bad;
}

inline bool is_consistent(const CubicGraph& g, const LinkColoring& col) { return inconsistent_vertices(g, col).empty(); }

struct VariableEdge {
  EdgeId edge = kNoEdge;
  Color first = Color::a;   // at EdgeEnds::first
  Color second = Color::b;  // at EdgeEnds::second

  bool operator==(const VariableEdge&) const = default;
};

inline std::vector<VariableEdge> variables(const CubicGraph& g, const LinkColoring& col) {
  std::vector<VariableEdge> out;
  for (EdgeId e : g.edges())
    if (col.is_variable(e)) out.push_back({e, col[e][0], col[e][1]});
  return out;
}

inline int variable_count(const CubicGraph& g, const LinkColoring& col) {
  int n = 0;
  for (EdgeId e : g.edges()) n += col.is_variable(e) ? 1 : 0;
  return n;
}

inline bool is_proper(const CubicGraph& g, const LinkColoring& col) {
  return is_consistent(g, col) && variable_count(g, col) == 0;
}

/// Swaps the `v`-side link colors of `e1` and `e2` in place and logs it.
inline void exchange(const CubicGraph& g, LinkColoring& col, VertexId v, EdgeId e1, EdgeId e2) {
  Link l1 = g.link(e1, v), l2 = g.link(e2, v);
  Color x = col.at(l1);
  col.set(l1, col.at(l2));
  col.set(l2, x);
  col.record(Exchange{v, e1, e2});
}

inline LinkColoring color_exchange(const CubicGraph& g, LinkColoring col, VertexId v, EdgeId e1, EdgeId e2) {
  exchange(g, col, v, e1, e2);
  return col;
}

enum class PathKind { cycle, open };

/// A maximal two-colored path or cycle, as the ordered sequence of its links.
///
/// Consecutive links either share an edge (crossing its midpoint) or share a
/// vertex. Cycles start with a midpoint crossing; open paths run from the
/// smaller end link to the larger and both ends sit at edge midpoints.
struct KempePath {
  PathKind kind = PathKind::open;
  Color first = Color::a;  // alphabetical
  Color second = Color::b;
  std::vector<Link> links;

  bool is_cycle() const noexcept { return kind == PathKind::cycle; }

  /// Distinct edges in traversal order.
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    for (const Link& l : links)
      if (out.empty() || out.back() != l.edge) out.push_back(l.edge);
    if (is_cycle() && out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
  }
  int length() const { return static_cast<int>(edges().size()); }
  bool contains(EdgeId e) const {
    return std::any_of(links.begin(), links.end(), [e](const Link& l) { return l.edge == e; });
  }
  std::vector<Link> sorted_links() const {
    auto s = links;
    std::sort(s.begin(), s.end());
    return s;
  }
};

namespace detail {

inline std::optional<Link> across(const LinkColoring& col, Link l, Color x, Color y) {
  Link o = l.opposite();
  Color k = col.at(o);
  if (k == x || k == y) return o;
  return std::nullopt;
}

inline std::optional<Link> partner(const CubicGraph& g, const LinkColoring& col, Link l, Color x, Color y) {
  Color want = col.at(l) == x ? y : x;
  VertexId w = g.endpoint(l);
  for (EdgeId f : g.incident(w)) {
    if (f == l.edge) continue;
    Link m = g.link(f, w);
    if (col.at(m) == want) return m;
  }
  return std::nullopt;
}

}  // namespace detail

/// The maximal (x, y) path or cycle through the link `start`.
inline KempePath maximal_path(const CubicGraph& g, const LinkColoring& col, Link start, Color x, Color y) {
  if (x == y) throw Error(ErrorCode::precondition, "a Kempe path needs two distinct colors");
  if (y < x) std::swap(x, y);
  Color s = col.at(start);
  if (s != x && s != y)
    throw Error(ErrorCode::wrong_start_color,
                "link of edge " + std::to_string(start.edge) + " is colored " + to_char(s) + ", not in " + pair_name(x, y));

  const std::size_t cap = 2 * static_cast<std::size_t>(g.edge_capacity());
  std::vector<char> seen(cap, 0);
  auto key = [](Link l) { return 2 * static_cast<std::size_t>(l.edge) + static_cast<std::size_t>(l.side); };

  auto walk = [&](bool vertex_first, bool& closed) {
    std::vector<Link> out;
    Link cur = start;
    bool vertex_move = vertex_first;
    closed = false;
    while (true) {
      auto nx = vertex_move ? detail::partner(g, col, cur, x, y) : detail::across(col, cur, x, y);
      if (!nx) break;
      if (*nx == start) {
        closed = true;
        break;
      }
      if (seen[key(*nx)]) break;
      seen[key(*nx)] = 1;
      out.push_back(*nx);
      cur = *nx;
      vertex_move = !vertex_move;
    }
    return out;
  };

  KempePath path;
  path.first = x;
  path.second = y;
  seen[key(start)] = 1;
  bool closed = false;
  auto forward = walk(false, closed);
  if (closed) {
    path.kind = PathKind::cycle;
    path.links.push_back(start);
    path.links.insert(path.links.end(), forward.begin(), forward.end());
    return path;
  }
  auto backward = walk(true, closed);
  path.kind = PathKind::open;
  path.links.assign(backward.rbegin(), backward.rend());
  path.links.push_back(start);
  path.links.insert(path.links.end(), forward.begin(), forward.end());
  if (path.links.back() < path.links.front()) std::reverse(path.links.begin(), path.links.end());
  return path;
}

/// Maximal (x, y) subgraph through edge `e`, started from whichever of its
/// links carries x or y.
inline KempePath maximal_path_through(const CubicGraph& g, const LinkColoring& col, EdgeId e, Color x, Color y) {
  Link l{e, 0};
  if (col.at(l) != x && col.at(l) != y) l = l.opposite();
  return maximal_path(g, col, l, x, y);
}

/// All maximal (x, y) subgraphs, in order of their smallest link.
inline std::vector<KempePath> maximal_paths(const CubicGraph& g, const LinkColoring& col, Color x, Color y) {
  std::vector<char> used(2 * static_cast<std::size_t>(g.edge_capacity()), 0);
  std::vector<KempePath> out;
  for (EdgeId e : g.edges())
    for (int s = 0; s < 2; ++s) {
      Link l{e, s};
      Color k = col.at(l);
      if ((k != x && k != y) || used[2 * static_cast<std::size_t>(e) + static_cast<std::size_t>(s)]) continue;
      auto p = maximal_path(g, col, l, x, y);
      for (const Link& m : p.links) used[2 * static_cast<std::size_t>(m.edge) + static_cast<std::size_t>(m.side)] = 1;
      out.push_back(std::move(p));
    }
  return out;
}

namespace detail {

struct Joint {
  EdgeId from = kNoEdge;
  EdgeId to = kNoEdge;
  VertexId vertex = kNoVertex;
};

/// Vertex crossings of a path in traversal order; for cycles the list wraps.
inline std::vector<Joint> joints(const CubicGraph& g, const KempePath& p) {
  std::vector<Joint> out;
  const auto& L = p.links;
  for (std::size_t i = 0; i + 1 < L.size(); ++i)
    if (L[i].edge != L[i + 1].edge) out.push_back({L[i].edge, L[i + 1].edge, g.endpoint(L[i])});
  if (p.is_cycle() && L.size() > 1 && L.back().edge != L.front().edge)
    out.push_back({L.back().edge, L.front().edge, g.endpoint(L.back())});
  return out;
}

}  // namespace detail

/// Eliminates the two variables `var1` and `var2` lying on one maximal
/// two-colored subgraph by moving `var1` step by step onto `var2`.
///
/// On a cycle the walk takes the shorter arc that passes no other variable;
/// equal arcs are decided by the smaller id of the first edge stepped onto.
inline LinkColoring kempe_walk_eliminate(const CubicGraph& g, LinkColoring col, EdgeId var1, EdgeId var2) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::not_co_path, "edges " + std::to_string(var1) + " and " + std::to_string(var2) + ": " + why);
  };
  if (var1 == var2) throw fail("the two variables must be distinct");
  if (!col.is_variable(var1) || !col.is_variable(var2)) throw fail("both edges must be variables");
  Color x = col[var1][0], y = col[var1][1];
  {
    auto p1 = std::minmax(x, y);
    auto p2 = std::minmax(col[var2][0], col[var2][1]);
    if (p1 != p2) throw fail("variables carry different color pairs");
  }
  KempePath path = maximal_path_through(g, col, var1, x, y);
  if (!path.contains(var2)) throw fail("variables lie on different maximal paths");

  auto J = detail::joints(g, path);
  auto E = path.edges();
  const int n = static_cast<int>(E.size());
  const int i1 = static_cast<int>(std::find(E.begin(), E.end(), var1) - E.begin());
  const int i2 = static_cast<int>(std::find(E.begin(), E.end(), var2) - E.begin());

  // Candidate walks as sequences of joint indices (with direction).
  struct Walk {
    std::vector<int> joint_ids;
    bool forward;
  };
  std::vector<Walk> candidates;
  auto clear_between = [&](const std::vector<int>& edge_ids) {
    for (std::size_t k = 0; k + 1 < edge_ids.size(); ++k)
      if (col.is_variable(E[static_cast<std::size_t>(edge_ids[k])])) return false;
    return true;
  };
  if (path.is_cycle()) {
    Walk fwd{{}, true}, bwd{{}, false};
    std::vector<int> fe, be;
    for (int k = i1; k != i2; k = (k + 1) % n) {
      fwd.joint_ids.push_back(k);
      fe.push_back((k + 1) % n);
    }
    for (int k = i1; k != i2; k = (k - 1 + n) % n) {
      bwd.joint_ids.push_back((k - 1 + n) % n);
      be.push_back((k - 1 + n) % n);
    }
    if (clear_between(fe)) candidates.push_back(fwd);
    if (clear_between(be)) candidates.push_back(bwd);
    auto first_edge = [&](const Walk& w) {
      int j = w.joint_ids.front();
      return w.forward ? J[static_cast<std::size_t>(j)].to : J[static_cast<std::size_t>(j)].from;
    };
    std::sort(candidates.begin(), candidates.end(), [&](const Walk& a, const Walk& b) {
      if (a.joint_ids.size() != b.joint_ids.size()) return a.joint_ids.size() < b.joint_ids.size();
      return first_edge(a) < first_edge(b);
    });
  } else {
    Walk w{{}, i1 < i2};
    std::vector<int> es;
    if (i1 < i2)
      for (int k = i1; k < i2; ++k) {
        w.joint_ids.push_back(k);
        es.push_back(k + 1);
      }
    else
      for (int k = i1; k > i2; --k) {
        w.joint_ids.push_back(k - 1);
        es.push_back(k - 1);
      }
    if (clear_between(es)) candidates.push_back(w);
  }
  if (candidates.empty()) throw fail("another variable separates them on the path");

  const int before = variable_count(g, col);
  const Walk& w = candidates.front();
  for (int j : w.joint_ids) {
    const auto& jt = J[static_cast<std::size_t>(j)];
    if (w.forward)
      exchange(g, col, jt.vertex, jt.from, jt.to);
    else
      exchange(g, col, jt.vertex, jt.to, jt.from);
  }
  if (variable_count(g, col) != before - 2)
    throw Error(ErrorCode::precondition, "Kempe walk did not eliminate the pair; coloring was inconsistent along the path");
  return col;
}

/// Swaps the two colors on every link of a maximal path in place.
inline void negate_in_place(const CubicGraph& g, LinkColoring& col, const KempePath& path) {
  if (path.links.empty()) throw Error(ErrorCode::not_maximal, "empty path");
  KempePath fresh = maximal_path(g, col, path.links.front(), path.first, path.second);
  if (fresh.sorted_links() != path.sorted_links())
    throw Error(ErrorCode::not_maximal, "path through edge " + std::to_string(path.links.front().edge) + " is not maximal");
  for (const Link& l : path.links) col.set(l, col.at(l) == path.first ? path.second : path.first);
  col.record(Negation{path.first, path.second, path.links});
}

inline LinkColoring negate(const CubicGraph& g, LinkColoring col, const KempePath& path) {
  negate_in_place(g, col, path);
  return col;
}

/// Re-applies `cert` to `initial`; the result carries `initial`'s log
/// followed by the replayed ops.
inline LinkColoring replay(const CubicGraph& g, LinkColoring initial, const Certificate& cert) {
  for (const auto& op : cert) {
    if (const auto* x = std::get_if<Exchange>(&op)) {
      exchange(g, initial, x->vertex, x->first, x->second);
    } else {
      const auto& n = std::get<Negation>(op);
      for (const Link& l : n.links) {
        Color k = initial.at(l);
        if (k != n.first && k != n.second)
          throw Error(ErrorCode::not_maximal, "replayed negation hits a link outside its color pair");
        initial.set(l, k == n.first ? n.second : n.first);
      }
      initial.record(n);
    }
  }
  return initial;
}

}  // namespace kempe
