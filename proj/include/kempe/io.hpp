#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "kempe/coloring.hpp"
#include "kempe/configuration.hpp"
#include "kempe/embedding.hpp"
#include "kempe/snarks.hpp"

namespace kempe {

using Json = nlohmann::ordered_json;

enum class GraphFormat { detect, json, graph6, edge_list };

struct GraphInput {
  CubicGraph graph;
  std::optional<RotationSystem> rotation;
  std::vector<std::string> labels;
};

inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline GraphFormat detect_format(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw Error(ErrorCode::parse_error, "empty input");
  if (text[i] == '{') return GraphFormat::json;
  if (text.compare(i, 10, ">>graph6<<") == 0) return GraphFormat::graph6;
  if (std::isdigit(static_cast<unsigned char>(text[i]))) return GraphFormat::edge_list;
  if (text[i] >= 63 && text[i] <= 126) return GraphFormat::graph6;
  throw Error(ErrorCode::parse_error, "unrecognised graph format");
}

inline CubicGraph parse_graph6(std::string text) {
  if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(0, 1);
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty graph6 string");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw Error(ErrorCode::parse_error, "invalid graph6 character");
  std::size_t pos = 0;
  auto byte = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw Error(ErrorCode::parse_error, "truncated graph6 string");
    return static_cast<std::uint64_t>(text[pos++] - 63);
  };
  std::uint64_t n = byte();
  if (n == 63) {
    int width = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      width = 6;
    }
    n = 0;
    for (int k = 0; k < width; ++k) n = (n << 6) | byte();
  }
  if (n > 1'000'000) throw Error(ErrorCode::parse_error, "graph6 vertex count too large");
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::uint64_t bits = 0;
  int avail = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      if (avail == 0) {
        bits = byte();
        avail = 6;
      }
      --avail;
      if ((bits >> avail) & 1u) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  if (pos != text.size()) throw Error(ErrorCode::parse_error, "trailing data after graph6 string");
  return CubicGraph::from_edges(static_cast<int>(n), edges);
}

inline std::string to_graph6(const CubicGraph& graph) {
  const CubicGraph g = compact(graph).graph;
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    if (adj[u][v]) throw Error(ErrorCode::precondition, "graph6 cannot encode parallel edges");
    adj[u][v] = adj[v][u] = 1;
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

/// Whitespace- or comma-separated "u-v" tokens, or one "u v" pair per line.
inline CubicGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string norm = text;
  for (char& ch : norm)
    if (ch == ',' || ch == ';') ch = ' ';
  std::istringstream lines(norm);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    auto number = [](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::parse_error, "bad vertex '" + s + "'");
      return static_cast<VertexId>(std::stol(s));
    };
    if (tok.size() == 2 && tok[0].find('-') == std::string::npos && tok[1].find('-') == std::string::npos) {
      edges.emplace_back(number(tok[0]), number(tok[1]));
      continue;
    }
    for (const auto& t : tok) {
      auto dash = t.find('-');
      if (dash == std::string::npos) throw Error(ErrorCode::parse_error, "expected u-v, got '" + t + "'");
      edges.emplace_back(number(t.substr(0, dash)), number(t.substr(dash + 1)));
    }
  }
  if (edges.empty()) throw Error(ErrorCode::parse_error, "no edges");
  VertexId n = 0;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  return CubicGraph::from_edges(n, edges);
}

inline GraphInput graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorCode::parse_error, "graph JSON needs \"n\" and \"edges\"");
  GraphInput out;
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::parse_error, "each edge must be [u, v]");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    out.graph = CubicGraph::from_edges(n, edges);
    if (j.contains("rotation")) {
      RotationSystem rot;
      for (const auto& r : j.at("rotation")) {
        if (!r.is_array() || r.size() != 3) throw Error(ErrorCode::parse_error, "each rotation entry lists three edges");
        rot.order.push_back({r[0].get<EdgeId>(), r[1].get<EdgeId>(), r[2].get<EdgeId>()});
      }
      if (!rotation_matches(out.graph, rot))
        throw Error(ErrorCode::inconsistent_rotation, "rotation does not match the incidence lists");
      out.rotation = std::move(rot);
    }
    if (j.contains("labels"))
      for (const auto& l : j.at("labels")) out.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed graph JSON: ") + e.what());
  }
  return out;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

inline GraphInput parse_graph(const std::string& text, GraphFormat fmt = GraphFormat::detect) {
  if (fmt == GraphFormat::detect) fmt = detect_format(text);
  switch (fmt) {
    case GraphFormat::json: return graph_from_json(parse_json_text(text));
    case GraphFormat::graph6: return {parse_graph6(text), std::nullopt, {}};
    default: return {parse_edge_list(text), std::nullopt, {}};
  }
}

inline Json graph_to_json(const CubicGraph& g, const RotationSystem* rot = nullptr, const std::vector<std::string>& labels = {}) {
  if (g.num_vertices() != g.vertex_capacity() || g.num_edges() != g.edge_capacity())
    throw Error(ErrorCode::precondition, "compact the graph before serialising");
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (EdgeId e : g.edges()) edges.push_back({g.ends(e).first, g.ends(e).second});
  j["edges"] = std::move(edges);
  if (rot) {
    Json r = Json::array();
    for (VertexId v : g.vertices()) r.push_back({rot->order[v][0], rot->order[v][1], rot->order[v][2]});
    j["rotation"] = std::move(r);
  }
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

inline Json certificate_to_json(const Certificate& cert) {
  Json ops = Json::array();
  for (const auto& op : cert) {
    if (const auto* x = std::get_if<Exchange>(&op)) {
      ops.push_back({{"op", "xchg"}, {"v", x->vertex}, {"e1", x->first}, {"e2", x->second}});
    } else {
      const auto& n = std::get<Negation>(op);
      Json links = Json::array();
      for (const Link& l : n.links) links.push_back({l.edge, l.side});
      ops.push_back({{"op", "negate"}, {"colors", pair_name(n.first, n.second)}, {"links", std::move(links)}});
    }
  }
  return ops;
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  try {
    for (const auto& op : j) {
      std::string kind = op.at("op").get<std::string>();
      if (kind == "xchg") {
        cert.push_back(Exchange{op.at("v").get<VertexId>(), op.at("e1").get<EdgeId>(), op.at("e2").get<EdgeId>()});
      } else if (kind == "negate") {
        auto colors = op.at("colors").get<std::string>();
        if (colors.size() != 2) throw Error(ErrorCode::parse_error, "negation names two colors");
        Negation n{parse_color(colors[0]), parse_color(colors[1]), {}};
        for (const auto& l : op.at("links")) n.links.push_back({l.at(0).get<EdgeId>(), l.at(1).get<int>()});
        cert.push_back(std::move(n));
      } else {
        throw Error(ErrorCode::parse_error, "unknown certificate op '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

inline Json links_to_json(const CubicGraph& g, const LinkColoring& col) {
  Json links = Json::array();
  for (EdgeId e : g.edges()) links.push_back(std::string{to_char(col[e][0]), to_char(col[e][1])});
  return links;
}

inline Json coloring_to_json(const CubicGraph& g, const LinkColoring& col, const RotationSystem* rot = nullptr) {
  Json j;
  j["graph"] = graph_to_json(g, rot);
  j["links"] = links_to_json(g, col);
  j["certificate"] = certificate_to_json(col.certificate());
  return j;
}

struct ColoringInput {
  GraphInput graph;
  LinkColoring coloring;
  Certificate certificate;
};

/// Reads {"graph": ..., "links": ["ab", ...], "certificate": [...]}. The
/// certificate is kept aside; the coloring's own log starts empty.
inline ColoringInput parse_coloring(const std::string& text) {
  Json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("graph") || !j.contains("links"))
    throw Error(ErrorCode::parse_error, "coloring JSON needs \"graph\" and \"links\"");
  ColoringInput out;
  out.graph = graph_from_json(j.at("graph"));
  const auto& g = out.graph.graph;
  const auto& links = j.at("links");
  if (!links.is_array() || static_cast<int>(links.size()) != g.num_edges())
    throw Error(ErrorCode::parse_error, "coloring lists " + std::to_string(links.is_array() ? links.size() : 0) +
                                            " edges, graph has " + std::to_string(g.num_edges()));
  out.coloring = LinkColoring(g.edge_capacity());
  for (EdgeId e : g.edges()) {
    const auto& l = links[static_cast<std::size_t>(e)];
    std::string s;
    if (l.is_string())
      s = l.get<std::string>();
    else if (l.is_array() && l.size() == 2 && l[0].is_string() && l[1].is_string())
      s = l[0].get<std::string>() + l[1].get<std::string>();
    if (s.size() != 2) throw Error(ErrorCode::parse_error, "edge " + std::to_string(e) + " needs two link colors");
    out.coloring[e] = {parse_color(s[0]), parse_color(s[1])};
  }
  if (j.contains("certificate")) out.certificate = certificate_from_json(j.at("certificate"));
  return out;
}

inline Json state_space_json(const Configuration& cfg) {
  return {{"tau", cfg.tau()}, {"tau_o", cfg.tau_odd()}, {"odd_lengths", cfg.odd_lengths()}, {"count", state_count(cfg).str()}};
}

inline Json verdict_to_json(const Configuration& cfg, const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["states_tested"] = v.states_tested;
  if (v.certificate) {
    Json c;
    c["eliminated"] = {v.certificate->eliminated.first, v.certificate->eliminated.second};
    c["initial"] = links_to_json(cfg.g(), v.certificate->initial);
    c["ops"] = certificate_to_json(v.certificate->ops);
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  j["state_space"] = state_space_json(cfg);
  if (v.escalated) j["escalated"] = true;
  if (v.via_companion) j["via_companion"] = true;
  if (v.companion_discrepancy) j["companion_discrepancy"] = true;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

inline Json witness_to_json(const PetersenWitnessMap& w) {
  Json map = Json::array();
  for (int i = 0; i < 10; ++i) map.push_back({i, w.map[static_cast<std::size_t>(i)]});
  return {{"map", std::move(map)}, {"chords", w.chords}, {"subdivision_paths", w.paths}};
}

inline std::string to_dot(const CubicGraph& g, const LinkColoring* col = nullptr) {
  auto name = [](Color x) {
    switch (x) {
      case Color::a: return "red";
      case Color::b: return "green";
      default: return "blue";
    }
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) out << "  " << v << ";\n";
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    out << "  " << u << " -- " << v << " [label=\"" << e << "\"";
    if (col) {
      Color x = (*col)[e][0], y = (*col)[e][1];
      if (x == y)
        out << ", color=\"" << name(x) << "\"";
      else
        out << ", color=\"" << name(x) << ";0.5:" << name(y) << "\", style=dashed";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kempe
