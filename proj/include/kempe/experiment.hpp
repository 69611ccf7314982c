#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "kempe/generate.hpp"
#include "kempe/io.hpp"
#include "kempe/petersen.hpp"
#include "kempe/snarks.hpp"
#include "kempe/solver.hpp"

namespace kempe {

inline constexpr const char* kToolVersion = "1.0.0";

struct ExperimentSpec {
  std::uint64_t count = 100;
  int min_vertices = 20;
  int max_vertices = 60;
  std::uint64_t seed = 42;
  GrowthPolicy growth = GrowthPolicy::pentagonal;
  bool include_even_ab_negations = false;
  std::uint64_t petersen_budget = 5'000'000;
  std::uint64_t census_budget = 1'000;   // 0 disables the per-configuration census
  std::uint64_t census_stride = 20;      // census on every k-th instance
  int pentagon_probes = 2;               // extra pentagon lifts per instance
  std::string fixture;                   // non-empty: test this graph's configurations instead
  std::string output;

  Json to_json() const {
    return {{"count", count},
            {"min_vertices", min_vertices},
            {"max_vertices", max_vertices},
            {"seed", seed},
            {"growth", to_string(growth)},
            {"include_even_ab_negations", include_even_ab_negations},
            {"petersen_budget", petersen_budget},
            {"census_budget", census_budget},
            {"census_stride", census_stride},
            {"pentagon_probes", pentagon_probes},
            {"fixture", fixture},
            {"output", output}};
  }
};

/// Outcome of one instance; merged in index order.
struct InstanceOutcome {
  std::uint64_t index = 0;
  int vertices = 0;
  int girth = 0;
  bool proper = false;
  std::string error;
  std::map<std::string, std::uint64_t> sub_cases;
  std::vector<PetersenEvent> events;
  std::vector<Json> violations;
  double millis = 0;
};

struct ExperimentReport {
  Json summary;
  Json timing;
  std::vector<InstanceOutcome> outcomes;
  std::uint64_t violations = 0;
  std::uint64_t failures = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline SolveOptions solve_options(const ExperimentSpec& spec, std::uint64_t index) {
  SolveOptions opt;
  opt.policy.include_even_ab_negations = spec.include_even_ab_negations;
  opt.petersen_budget = spec.petersen_budget;
  if (spec.census_stride > 0 && index % spec.census_stride == 0) opt.census_budget = spec.census_budget;
  return opt;
}

inline Json violation_json(const PostulateViolation& v, std::uint64_t index) {
  const auto& cfg = v.configuration;
  Json pent = Json::object();
  pent["vertices"] = v.witness.pentagon.vertices;
  pent["edges"] = v.witness.pentagon.edges;
  auto c = compact(cfg.g());
  return {{"instance", index},
          {"graph", graph_to_json(c.graph)},
          {"matching", cfg.matching.edges},
          {"matching_color", std::string(1, to_char(cfg.matching_color))},
          {"pentagon", std::move(pent)},
          {"state", links_to_json(cfg.g(), v.witness.state)},
          {"verdict", verdict_to_json(cfg, v.verdict)}};
}

/// Re-inserts an admissible edge of a pentagonal face into a solved copy of
/// the graph without it, forcing a pentagon lift.
inline void probe_pentagon(const CubicGraph& embedded, const Face& face, const SolveOptions& opt, InstanceOutcome& out) {
  EdgeId e;
  try {
    e = find_admissible_edge(embedded, face);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::no_admissible_edge) return;
    throw;
  }
  auto [smaller, tr] = delete_edge_smooth(embedded, e);
  SolveResult sub = three_edge_color_planar(smaller, RotationSystem::from_incidence(smaller), opt);
  InductionFrame frame{std::move(tr), face, 5, {}};
  SolveResult lifted;
  LinkColoring col = lift_frame(smaller, embedded, std::move(sub.coloring), frame, opt, lifted);
  if (!is_proper(embedded, col)) throw Error(ErrorCode::not_proper, "pentagon probe left the coloring improper");
  ++out.sub_cases["probe-" + frame.sub_case];
  for (auto& ev : lifted.petersen) out.events.push_back(std::move(ev));
}

inline InstanceOutcome run_generated(const ExperimentSpec& spec, std::uint64_t index) {
  InstanceOutcome out;
  out.index = index;
  std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(index)));
  int lo = (spec.min_vertices + 1) / 2, hi = spec.max_vertices / 2;
  out.vertices = 2 * std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng);
  auto eg = generate_random_cubic_planar(out.vertices, rng(), spec.growth);
  out.girth = girth(eg.graph);
  const SolveOptions opt = solve_options(spec, index);
  try {
    SolveResult res = three_edge_color_planar(eg.graph, eg.rotation, opt);
    out.proper = is_proper(eg.graph, res.coloring);
    for (const auto& f : res.frames) ++out.sub_cases[f.sub_case];
    for (auto& ev : res.petersen) out.events.push_back(std::move(ev));

    CubicGraph embedded = apply_rotation(eg.graph, eg.rotation);
    std::vector<Face> pentagons;
    for (auto& f : enumerate_faces(embedded, eg.rotation))
      if (f.length() == 5) pentagons.push_back(std::move(f));
    std::shuffle(pentagons.begin(), pentagons.end(), rng);
    for (int k = 0; k < spec.pentagon_probes && k < static_cast<int>(pentagons.size()); ++k)
      probe_pentagon(embedded, pentagons[static_cast<std::size_t>(k)], opt, out);
  } catch (const PostulateViolation& v) {
    out.violations.push_back(violation_json(v, index));
    out.error = to_string(v.code());
  } catch (const Error& e) {
    out.error = std::string(e.what());
  }
  return out;
}

/// Tests every two-variable configuration of a fixture carrying a Petersen
/// configuration on one of its 5-cycles.
inline InstanceOutcome run_fixture(const ExperimentSpec& spec, std::uint64_t index) {
  InstanceOutcome out;
  out.index = index;
  auto g = std::make_shared<const CubicGraph>(fixture(spec.fixture));
  out.vertices = g->num_vertices();
  out.girth = girth(*g);
  const SolveOptions opt = solve_options(spec, index);
  auto candidates = five_cycles(*g);
  auto list = enumerate_perfect_matchings(*g, 1u << 16);
  for (const auto& m : list.matchings) {
    Configuration cfg = from_matching(g, m);
    if (variable_count(*g, cfg.coloring) != 2) continue;
    auto w = detect_petersen_configuration(cfg, candidates);
    if (!w) continue;
    PetersenEvent ev;
    ev.vertices = g->num_vertices();
    ev.tau_even = cfg.tau_even();
    ev.odd_lengths = cfg.odd_lengths();
    ev.verdict = reduce_petersen(cfg, *w, opt.policy, opt.petersen_budget);
    if (ev.verdict.kind == VerdictKind::irreducible_exhausted)
      out.violations.push_back(violation_json(PostulateViolation(cfg, *w, ev.verdict), index));
    out.events.push_back(std::move(ev));
    break;
  }
  out.error = out.violations.empty() ? "" : "PostulateViolation";
  return out;
}

}  // namespace detail

/// Runs the experiment; the summary depends only on the ExperimentSpec.
inline ExperimentReport run_experiment(const ExperimentSpec& spec, int workers = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.outcomes.resize(static_cast<std::size_t>(spec.count));
  std::atomic<std::uint64_t> next{0};
  std::mutex fail_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < spec.count;) {
      try {
        auto s = std::chrono::steady_clock::now();
        auto o = spec.fixture.empty() ? detail::run_generated(spec, i) : detail::run_fixture(spec, i);
        o.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - s).count();
        rep.outcomes[static_cast<std::size_t>(i)] = std::move(o);
      } catch (...) {
        std::lock_guard lock(fail_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < workers; ++k) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::uint64_t proper = 0, petersen = 0, reduced = 0, direct = 0, companion = 0, discrepancies = 0, escalated = 0,
                states = 0, census_configs = 0, census_states = 0, census_reducible = 0, without_reducible = 0;
  std::map<std::string, std::uint64_t> sub_cases, girths, tau_even_hist;
  std::vector<std::uint64_t> fraction_hist(10, 0);  // share of reducible states, in tenths
  std::map<std::string, std::uint64_t> reducible_count_hist;
  Json failures = Json::array(), violations = Json::array();
  std::vector<double> times;
  for (const auto& o : rep.outcomes) {
    times.push_back(o.millis);
    proper += o.proper ? 1 : 0;
    ++girths[std::to_string(o.girth)];
    for (const auto& [k, v] : o.sub_cases) sub_cases[k] += v;
    if (!o.error.empty() && o.violations.empty()) failures.push_back({{"instance", o.index}, {"error", o.error}});
    for (const auto& v : o.violations) violations.push_back(v);
    for (const auto& ev : o.events) {
      ++petersen;
      states += ev.verdict.states_tested;
      ++tau_even_hist[std::to_string(ev.tau_even)];
      if (ev.verdict.reduced()) {
        ++reduced;
        (ev.verdict.via_companion ? companion : direct) += 1;
      }
      discrepancies += ev.verdict.companion_discrepancy ? 1 : 0;
      escalated += ev.verdict.escalated ? 1 : 0;
      if (ev.census) {
        ++census_configs;
        census_states += ev.census->tested;
        census_reducible += ev.census->reducible;
        without_reducible += ev.census->reducible == 0 ? 1 : 0;
        if (ev.census->tested > 0) {
          auto bin = static_cast<std::size_t>(10 * ev.census->reducible / ev.census->tested);
          ++fraction_hist[std::min<std::size_t>(bin, 9)];
        }
        std::uint64_t r = ev.census->reducible;
        std::string bucket = r == 0 ? "0" : r < 10 ? "1-9" : r < 100 ? "10-99" : r < 1000 ? "100-999" : "1000+";
        ++reducible_count_hist[bucket];
      }
    }
  }
  rep.violations = violations.size();
  rep.failures = failures.size();

  Json summary;
  summary["instances"] = spec.count;
  summary["properly_colored"] = proper;
  summary["failures"] = std::move(failures);
  summary["petersen_configurations"] = petersen;
  summary["reduced"] = reduced;
  summary["reduced_directly"] = direct;
  summary["reduced_via_companion"] = companion;
  summary["companion_discrepancies"] = discrepancies;
  summary["escalated_to_full_space"] = escalated;
  summary["states_tested"] = states;
  summary["postulate_violations"] = rep.violations;
  summary["violations"] = std::move(violations);
  summary["lift_cases"] = sub_cases;
  summary["girth_histogram"] = girths;
  summary["tau_even_histogram"] = tau_even_hist;
  summary["census"] = {{"configurations", census_configs},
                       {"states", census_states},
                       {"reducible_states", census_reducible},
                       {"configurations_without_reducible_state", without_reducible},
                       {"reducible_fraction_histogram", fraction_hist},
                       {"reducible_count_histogram", reducible_count_hist}};
  rep.summary = std::move(summary);

  std::sort(times.begin(), times.end());
  double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  double sum = 0;
  for (double t : times) sum += t;
  rep.timing = {{"wall_ms", total},
                {"workers", workers},
                {"instance_mean_ms", times.empty() ? 0.0 : sum / static_cast<double>(times.size())},
                {"instance_median_ms", times.empty() ? 0.0 : times[times.size() / 2]},
                {"instance_max_ms", times.empty() ? 0.0 : times.back()}};
  return rep;
}

/// Full report: tool identity, spec, its hash, summary and (optionally) timing.
inline Json experiment_report_json(const ExperimentSpec& spec, const ExperimentReport& rep, bool with_timing = true) {
  Json j;
  j["tool"] = {{"name", "kempe"}, {"version", kToolVersion}};
  j["spec"] = spec.to_json();
  j["input_hash"] = fnv1a_hex(spec.to_json().dump());
  j["summary"] = rep.summary;
  if (with_timing) j["timing"] = rep.timing;
  return j;
}

}  // namespace kempe
