#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kempe/configuration.hpp"
#include "kempe/matching.hpp"

namespace kempe {

struct RandomWalkOptions {
  ReductionPolicy policy;
  int restart_after = 32;  // fruitless global steps before drawing a fresh matching
  int restart_attempts = 16;
};

struct RandomWalkStats {
  std::uint64_t states_tested = 0;
  std::uint64_t global_steps = 0;
  std::uint64_t restarts = 0;
  std::uint64_t eliminations = 0;
  int initial_variables = 0;
  int final_variables = 0;
  bool monotone = true;  // variable count never went up
};

struct RandomWalkResult {
  std::optional<LinkColoring> coloring;  // proper on success
  RandomWalkStats stats;

  bool solved() const noexcept { return coloring.has_value(); }
};

/// Alternates exhaustive local search with seeded random global steps until
/// every variable is eliminated or `budget` (states tested plus global steps)
/// runs out.
inline RandomWalkResult random_walk_solve(const CubicGraph& graph, std::uint64_t seed, std::uint64_t budget,
                                          RandomWalkOptions opt = {}) {
  auto g = std::make_shared<const CubicGraph>(graph);
  std::mt19937_64 rng(seed);
  RandomWalkResult out;
  auto& st = out.stats;
  auto first = random_perfect_matching(*g, rng);
  if (!first) return out;
  Configuration cfg = from_matching(g, *first);
  int vars = variable_count(*g, cfg.coloring);
  st.initial_variables = st.final_variables = vars;
  int fruitless = 0;
  auto spent = [&] { return st.states_tested + st.global_steps; };

  while (true) {
    if (vars == 0) {
      out.coloring = cfg.coloring;
      out.coloring->clear_certificate();
      return out;
    }
    if (spent() >= budget) return out;
    Verdict v = is_configuration_reducible(cfg, opt.policy, budget - spent());
    st.states_tested += v.states_tested;
    if (v.reduced()) {
      LinkColoring col = v.certificate->apply(*g);
      col.clear_certificate();
      cfg = from_coloring(g, std::move(col), cfg.matching_color);
      int now = variable_count(*g, cfg.coloring);
      st.monotone = st.monotone && now <= vars;
      vars = now;
      st.final_variables = vars;
      ++st.eliminations;
      fruitless = 0;
      continue;
    }
    if (v.kind == VerdictKind::budget_exceeded || spent() >= budget) return out;

    auto candidates = global_step_candidates(cfg);
    if (candidates.empty() || fruitless >= opt.restart_after) {
      bool restarted = false;
      for (int t = 0; t < opt.restart_attempts && !restarted; ++t) {
        auto m = random_perfect_matching(*g, rng);
        if (!m) break;
        Configuration fresh = from_matching(g, *m);
        if (variable_count(*g, fresh.coloring) <= vars) {
          cfg = std::move(fresh);
          vars = variable_count(*g, cfg.coloring);
          st.final_variables = vars;
          restarted = true;
        }
      }
      fruitless = 0;
      if (restarted) {
        ++st.restarts;
        continue;
      }
      if (candidates.empty()) return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    cfg = global_step(cfg, candidates[pick(rng)]);
    cfg.coloring.clear_certificate();
    ++st.global_steps;
    ++fruitless;
  }
}

struct OddnessResult {
  int oddness = 0;
  bool exact = false;
  std::size_t matchings_examined = 0;
};

/// Fewest odd cycles over the 2-factors complementary to perfect matchings.
inline OddnessResult oddness(const CubicGraph& g, std::size_t matching_limit = 1u << 20) {
  auto list = enumerate_perfect_matchings(g, matching_limit);
  OddnessResult r;
  r.exact = !list.truncated;
  r.matchings_examined = list.matchings.size();
  r.oddness = g.num_vertices();
  for (const auto& m : list.matchings) {
    int odd = 0;
    for (const auto& c : tait_cycles(g, m)) odd += c.odd() ? 1 : 0;
    r.oddness = std::min(r.oddness, odd);
  }
  return r;
}

struct ClosedSetLimits {
  std::size_t max_matchings = 1u << 16;
  std::uint64_t max_states = 50'000'000;
};

struct ClosedSet {
  std::vector<Matching> members;
  int min_variables = 0;
  std::uint64_t states_tested = 0;
  std::vector<std::string> violations;  // members whose variable count exceeds the minimum
};

/// The configurations reachable by global steps from the minimum-oddness
/// ones, provided every one of them is irreducible. nullopt when some
/// reachable configuration is reducible or the graph is 3-edge-colorable.
inline std::optional<ClosedSet> closed_irreducible_set(const CubicGraph& graph, ClosedSetLimits limits = {}) {
  auto g = std::make_shared<const CubicGraph>(graph);
  auto list = enumerate_perfect_matchings(*g, limits.max_matchings);
  if (list.truncated) throw Error(ErrorCode::limits_exceeded, "too many perfect matchings to enumerate");
  if (list.matchings.empty()) return std::nullopt;

  auto odd_count = [&](const Matching& m) {
    int k = 0;
    for (const auto& c : tait_cycles(*g, m)) k += c.odd() ? 1 : 0;
    return k;
  };
  int min_odd = g->num_vertices();
  for (const auto& m : list.matchings) min_odd = std::min(min_odd, odd_count(m));
  if (min_odd == 0) return std::nullopt;

  ClosedSet out;
  out.min_variables = min_odd;
  std::map<Matching, bool> seen;
  std::deque<Matching> queue;
  for (const auto& m : list.matchings)
    if (odd_count(m) == min_odd) {
      seen[m] = true;
      queue.push_back(m);
    }
  while (!queue.empty()) {
    Matching m = queue.front();
    queue.pop_front();
    out.members.push_back(m);
    if (odd_count(m) != min_odd)
      out.violations.push_back("matching with " + std::to_string(odd_count(m)) + " odd cycles reached by global steps");
    Configuration cfg = from_matching(g, m);
    bool reducible = false;
    bool limit_hit = false;
    detail::traverse_states(cfg, true, [&](const Configuration& s) {
      if (out.states_tested >= limits.max_states) {
        limit_hit = true;
        return false;
      }
      ++out.states_tested;
      if (is_state_reducible(s)) {
        reducible = true;
        return false;
      }
      for (const auto& cyc : global_step_candidates(s)) {
        Configuration next = global_step(s, cyc);
        Matching key = next.matching;
        if (seen.emplace(key, true).second) queue.push_back(std::move(key));
      }
      return true;
    });
    if (limit_hit) throw Error(ErrorCode::limits_exceeded, "state budget exhausted while building the closed set");
    if (reducible) return std::nullopt;
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace kempe
