#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "common.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<EmbeddedGraph> corpus() {
  std::vector<EmbeddedGraph> out;
  for (int n = 6; n <= 100; n += 2)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      out.push_back(generate_random_cubic_planar(n, seed, GrowthPolicy::uniform));
      out.push_back(generate_random_cubic_planar(n, seed, GrowthPolicy::pentagonal));
    }
  return out;
}

ExperimentReport replication_report;

Outcome replication() {
  ExperimentSpec spec;
  spec.count = 10'000;
  spec.min_vertices = 20;
  spec.max_vertices = 60;
  spec.seed = 42;
  spec.growth = GrowthPolicy::pentagonal;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  replication_report = run_experiment(spec, workers);
  const auto& s = replication_report.summary;
  std::ostringstream d;
  d << "instances=" << s["instances"] << " colored=" << s["properly_colored"]
    << " petersen_configurations=" << s["petersen_configurations"] << " reduced=" << s["reduced"]
    << " via_companion=" << s["reduced_via_companion"] << " violations=" << replication_report.violations
    << " failures=" << replication_report.failures;
  bool ok = replication_report.violations == 0 && replication_report.failures == 0 && s["reduced"] == s["petersen_configurations"] &&
            s["properly_colored"] == spec.count && s["petersen_configurations"].get<std::uint64_t>() > 0;
  return {ok, d.str()};
}

Outcome petersen_exhaustive() {
  auto g = fixture("petersen");
  auto list = enumerate_perfect_matchings(g, 1000);
  bool ok = list.matchings.size() == 6 && !list.truncated;
  std::ostringstream d;
  d << "matchings=" << list.matchings.size();
  for (const auto& m : list.matchings) {
    auto cfg = from_matching(g, m);
    std::set<StateKey> seen;
    detail::traverse_states(cfg, true, [&](const Configuration& s) {
      seen.insert(state_key(s));
      return true;
    });
    auto census = count_reducible_states(cfg, {true});
    ok = ok && seen.size() == 100 && state_count(cfg) == BigInt(100) && census.tested == 100 && census.reducible == 0 && census.exhausted;
    d << " [" << seen.size() << " states, " << census.reducible << " reducible]";
  }
  auto cs = closed_irreducible_set(g);
  ok = ok && cs && cs->members.size() == 6;
  d << " closed_set=" << (cs ? std::to_string(cs->members.size()) : "none");
  return {ok, d.str()};
}

Outcome solver_totality(const std::vector<EmbeddedGraph>& graphs) {
  int good = 0, bad = 0;
  double worst_100 = 0;
  for (const auto& eg : graphs) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = three_edge_color_planar(eg.graph, eg.rotation);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (eg.graph.num_vertices() == 100) worst_100 = std::max(worst_100, ms);
    auto r = verify_coloring(eg.graph, res.coloring);
    auto fc = four_color_faces(eg.graph, eg.rotation, res.coloring);
    bool ok = r.proper && r.class_is_perfect_matching[0] && r.class_is_perfect_matching[1] && r.class_is_perfect_matching[2] &&
              face_conflicts(eg.graph, eg.rotation, fc) == 0;
    (ok ? good : bad) += 1;
  }
  std::ostringstream d;
  d << "instances=" << graphs.size() << " verified=" << good << " failed=" << bad << " max_ms_at_n100=" << worst_100;
  return {bad == 0 && worst_100 < 100.0, d.str()};
}

std::set<StateKey> closure(const Configuration& cfg) {
  std::set<StateKey> seen{state_key(cfg)};
  std::vector<Configuration> stack{cfg};
  while (!stack.empty()) {
    Configuration cur = std::move(stack.back());
    stack.pop_back();
    for (int i = 0; i < cur.tau(); ++i) {
      std::vector<LocalMove> moves{NegateAbCycle{i}};
      if (cur.cycles[static_cast<std::size_t>(i)].odd()) moves.push_back(SlideVariable{i, 1});
      for (const auto& mv : moves) {
        Configuration next = local_step(cur, mv);
        next.coloring.clear_certificate();
        if (seen.insert(state_key(next)).second) stack.push_back(std::move(next));
      }
    }
  }
  return seen;
}

Outcome state_count_formula() {
  std::size_t configs = 0, mismatches = 0;
  for (int n = 4; n <= 14; n += 2)
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      for (auto policy : {GrowthPolicy::uniform, GrowthPolicy::pentagonal}) {
        auto g = generate_random_cubic_planar(n, seed, policy).graph;
        for (const auto& m : enumerate_perfect_matchings(g, 1u << 16).matchings) {
          auto cfg = from_matching(g, m);
          ++configs;
          if (BigInt(closure(cfg).size()) != state_count(cfg)) ++mismatches;
        }
      }
  std::ostringstream d;
  d << "configurations=" << configs << " mismatches=" << mismatches;
  return {mismatches == 0 && configs > 0, d.str()};
}

Outcome kempe_properties() {
  std::mt19937_64 rng(2024);
  std::size_t exchanges = 0, negations = 0, walks = 0, configs = 0, failures = 0;
  while (exchanges < 10'000 || negations < 10'000 || walks < 10'000) {
    auto g = random_cubic(6 + 2 * static_cast<int>(rng() % 15), rng);
    auto col = random_consistent(g, rng, static_cast<int>(rng() % 6));
    auto cfg = from_matching(g, *random_perfect_matching(g, rng));
    ++configs;
    if (cfg.tau_odd() % 2 != 0) ++failures;

    auto verts = g.vertices();
    VertexId v = verts[rng() % verts.size()];
    auto inc = g.incident(v);
    auto once = color_exchange(g, col, v, inc[0], inc[1 + rng() % 2]);
    ++exchanges;
    if (!is_consistent(g, once)) ++failures;

    std::size_t x = rng() % 3, y = (x + 1 + rng() % 2) % 3;
    auto paths = maximal_paths(g, col, kColors[x], kColors[y]);
    if (!paths.empty()) {
      const auto& p = paths[rng() % paths.size()];
      auto neg = negate(g, col, p);
      ++negations;
      if (!is_consistent(g, neg) || variable_count(g, neg) != variable_count(g, col) || !negate(g, neg, p).same_links(col)) ++failures;
    }

    if (auto pair = detail::co_path_pair(g, col)) {
      auto out = kempe_walk_eliminate(g, col, pair->first, pair->second);
      ++walks;
      if (variable_count(g, out) != variable_count(g, col) - 2 || !replay(g, col, out.certificate()).same_links(out)) ++failures;
    }
  }
  std::ostringstream d;
  d << "exchanges=" << exchanges << " negations=" << negations << " walks=" << walks << " configurations=" << configs
    << " failures=" << failures;
  return {failures == 0, d.str()};
}

Outcome contractions() {
  std::ostringstream d;
  bool ok = true;
  for (const char* name : {"flower_j5", "loupekine1", "loupekine2", "double_star"}) {
    auto g = fixture(name);
    auto r = find_petersen_contraction(g);
    bool sub = r && is_petersen_subdivision(g, r->witness);
    ok = ok && sub;
    d << name << "=" << (sub ? "subdivision" : "none") << " ";
  }
  return {ok, d.str()};
}

Outcome structural_properties(const std::vector<EmbeddedGraph>& graphs) {
  std::size_t faces = 0, girth_failures = 0, admissible_failures = 0;
  for (const auto& eg : graphs) {
    int gi = girth(eg.graph);
    if (gi == 0 || gi > 5) ++girth_failures;
    for (const auto& f : enumerate_faces(eg.graph, eg.rotation)) {
      ++faces;
      try {
        find_admissible_edge(eg.graph, f);
      } catch (const Error&) {
        ++admissible_failures;
      }
    }
  }
  std::ostringstream d;
  d << "graphs=" << graphs.size() << " faces=" << faces << " girth_failures=" << girth_failures
    << " faces_without_admissible_edge=" << admissible_failures;
  return {girth_failures == 0 && admissible_failures == 0, d.str()};
}

Outcome reducible_census() {
  const auto& census = replication_report.summary["census"];
  std::ostringstream d;
  d << "configurations=" << census["configurations"] << " states=" << census["states"]
    << " reducible_states=" << census["reducible_states"]
    << " without_reducible=" << census["configurations_without_reducible_state"]
    << " count_histogram=" << census["reducible_count_histogram"].dump()
    << " fraction_histogram=" << census["reducible_fraction_histogram"].dump();
  bool ok = census["configurations"].get<std::uint64_t>() > 0 && census["configurations_without_reducible_state"] == 0;
  return {ok, d.str()};
}

}  // namespace

int main() {
  auto graphs = corpus();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 reducibility replication", replication},
      {"2 petersen exhaustive irreducibility", petersen_exhaustive},
      {"3 solver totality", [&] { return solver_totality(graphs); }},
      {"4 state count formula", state_count_formula},
      {"5 kempe calculus properties", kempe_properties},
      {"6 snark contractions", contractions},
      {"7 girth and admissible edges", [&] { return structural_properties(graphs); }},
      {"8 reducible-state census", reducible_census},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%s] %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), s);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
