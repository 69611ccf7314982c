#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kempe/kempe.hpp"

namespace {

using namespace kempe;

enum Exit { kOk = 0, kImproper = 1, kViolation = 2, kInputError = 3, kBudget = 4 };

struct Flags {
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  int workers = 1;
  bool dot = false;
  bool non_planar = false;
  bool include_even = false;
  bool no_timing = false;
  std::string format = "json";

  Json to_json() const {
    return {{"seed", seed},          {"budget", budget},         {"workers", workers},
            {"dot", dot},            {"non_planar", non_planar}, {"include_even_ab_negations", include_even},
            {"format", format},      {"no_timing", no_timing}};
  }
};

struct Source {
  std::string text;  // hashed
  GraphInput graph;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// gen:n=50:seed=7[:growth=pentagonal]
EmbeddedGraph parse_gen_uri(const std::string& uri) {
  int n = 0;
  std::uint64_t seed = 0;
  GrowthPolicy growth = GrowthPolicy::uniform;
  std::istringstream parts(uri.substr(4));
  for (std::string kv; std::getline(parts, kv, ':');) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::parse_error, "bad gen: field '" + kv + "'");
    std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    try {
      if (k == "n")
        n = std::stoi(v);
      else if (k == "seed")
        seed = std::stoull(v);
      else if (k == "growth")
        growth = parse_growth_policy(v);
      else
        throw Error(ErrorCode::parse_error, "unknown gen: field '" + k + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::parse_error, "bad value in gen: field '" + kv + "'");
    }
  }
  if (n < 4 || n % 2) throw Error(ErrorCode::parse_error, "gen: needs an even n >= 4");
  return generate_random_cubic_planar(n, seed, growth);
}

Source load(const std::string& spec) {
  Source s;
  if (spec.rfind("gen:", 0) == 0) {
    auto eg = parse_gen_uri(spec);
    s.text = spec;
    s.graph = {std::move(eg.graph), std::move(eg.rotation), {}};
    return s;
  }
  if (!std::filesystem::exists(spec)) {
    auto names = fixture_names();
    if (std::find(names.begin(), names.end(), spec) == names.end())
      throw Error(ErrorCode::parse_error, "'" + spec + "' is neither a file, a gen: URI nor a fixture");
    s.text = spec;
    s.graph = {fixture(spec), std::nullopt, {}};
    return s;
  }
  s.text = read_file(spec);
  auto j = detect_format(s.text) == GraphFormat::json ? parse_json_text(s.text) : Json();
  if (j.is_object() && j.contains("graph") && j.contains("links"))
    s.graph = parse_coloring(s.text).graph;
  else
    s.graph = parse_graph(s.text);
  return s;
}

RotationSystem embedding_of(const GraphInput& in) {
  if (in.rotation) {
    if (!is_planar_rotation(in.graph, *in.rotation))
      throw Error(ErrorCode::non_planar, "supplied rotation system is not planar");
    return *in.rotation;
  }
  return compute_embedding(in.graph);
}

Json envelope(const std::string& command, const Flags& f, const std::string& input_text) {
  Json j;
  j["tool"] = {{"name", "kempe"}, {"version", kToolVersion}};
  j["command"] = command;
  j["flags"] = f.to_json();
  j["input_hash"] = fnv1a_hex(input_text);
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::postulate_violation: return kViolation;
    case ErrorCode::limits_exceeded: return kBudget;
    case ErrorCode::not_proper: return kImproper;
    default: return kInputError;
  }
}

int cmd_color(const std::string& input, const Flags& f) {
  Source src = load(input);
  const auto& g = src.graph.graph;
  Json out = envelope("color", f, src.text);
  auto t0 = std::chrono::steady_clock::now();
  LinkColoring col;
  std::optional<RotationSystem> rot;
  if (f.non_planar) {
    RandomWalkOptions opt;
    opt.policy.include_even_ab_negations = f.include_even;
    auto r = random_walk_solve(g, f.seed, f.budget, opt);
    out["random_walk"] = {{"states_tested", r.stats.states_tested},   {"global_steps", r.stats.global_steps},
                          {"restarts", r.stats.restarts},             {"eliminations", r.stats.eliminations},
                          {"initial_variables", r.stats.initial_variables}, {"final_variables", r.stats.final_variables}};
    if (!r.solved()) {
      out["result"] = "budget exhausted";
      emit(out);
      return kBudget;
    }
    col = std::move(*r.coloring);
  } else {
    rot = embedding_of(src.graph);
    SolveOptions opt;
    opt.policy.include_even_ab_negations = f.include_even;
    opt.petersen_budget = f.budget;
    SolveResult res;
    try {
      res = three_edge_color_planar(g, *rot, opt);
    } catch (const PostulateViolation& v) {
      out["result"] = "postulate violation";
      out["violation"] = verdict_to_json(v.configuration, v.verdict);
      emit(out);
      return kViolation;
    }
    col = std::move(res.coloring);
    Json trace = Json::array();
    for (const auto& fr : res.frames)
      trace.push_back({{"deleted", fr.trace.deleted}, {"face_length", fr.girth_case}, {"case", fr.sub_case}});
    out["trace"] = std::move(trace);
    Json events = Json::array();
    for (const auto& ev : res.petersen)
      events.push_back({{"vertices", ev.vertices}, {"verdict", to_string(ev.verdict.kind)}, {"states_tested", ev.verdict.states_tested}});
    out["petersen_configurations"] = std::move(events);
    out["face_coloring"] = four_color_faces(g, *rot, col).colors;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (f.dot || f.format == "dot") {
    std::cout << to_dot(g, &col);
    return is_proper(g, col) ? kOk : kImproper;
  }
  out["coloring"] = coloring_to_json(g, col, rot ? &*rot : nullptr);
  out["proper"] = is_proper(g, col);
  if (!f.no_timing) out["timing"] = {{"solve_ms", ms}};
  emit(out);
  return is_proper(g, col) ? kOk : kImproper;
}

int cmd_verify(const std::string& first, const std::string& second, const Flags& f) {
  std::string text = read_file(first);
  ColoringInput ci;
  if (second.empty()) {
    ci = parse_coloring(text);
  } else {
    std::string ctext = read_file(second);
    Source src = load(first);
    ci = parse_coloring(ctext);
    if (!(ci.graph.graph == src.graph.graph)) throw Error(ErrorCode::parse_error, "coloring belongs to a different graph");
    text += ctext;
  }
  const auto& g = ci.graph.graph;
  auto r = verify_coloring(g, ci.coloring);
  Json out = envelope("verify", f, text);
  out["consistent"] = r.consistent;
  out["inconsistent_vertices"] = r.inconsistent_vertices;
  Json vars = Json::array();
  for (const auto& v : r.variables)
    vars.push_back({{"edge", v.edge}, {"colors", std::string{to_char(v.first), to_char(v.second)}}});
  out["variables"] = std::move(vars);
  out["proper"] = r.proper;
  out["color_classes_perfect"] = r.class_is_perfect_matching;
  if (!ci.certificate.empty()) {
    LinkColoring start = ci.coloring;
    bool replays = true;
    try {
      replay(g, start, ci.certificate);
    } catch (const Error&) {
      replays = false;
    }
    out["certificate_replays"] = replays;
  }
  emit(out);
  return r.proper ? kOk : kImproper;
}

int cmd_experiment(ExperimentSpec spec, const Flags& f) {
  auto rep = run_experiment(spec, f.workers);
  Json j = experiment_report_json(spec, rep, !f.no_timing);
  if (!spec.output.empty()) {
    std::ofstream out(spec.output);
    if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + spec.output + "'");
    out << j.dump(2) << "\n";
  } else {
    emit(j);
  }
  return rep.violations > 0 ? kViolation : kOk;
}

int cmd_contract(const std::string& input, const Flags& f) {
  Source src = load(input);
  Json out = envelope("contract", f, src.text);
  ContractionLimits lim;
  lim.max_attempts = static_cast<std::size_t>(f.budget);
  auto r = find_petersen_contraction(src.graph.graph, lim);
  if (!r) {
    out["result"] = "inconclusive";
    emit(out);
    return kOk;
  }
  out["result"] = "witness";
  out["matching"] = r->configuration.matching.edges;
  out["external_chords"] = r->chords.external.size();
  out["internal_chords"] = r->chords.internal.size();
  out["witness"] = witness_to_json(r->witness);
  out["subdivision_verified"] = is_petersen_subdivision(src.graph.graph, r->witness);
  emit(out);
  return kOk;
}

int cmd_classify(const std::string& input, const Flags& f) {
  Source src = load(input);
  const auto& g = src.graph.graph;
  Json out = envelope("classify", f, src.text);
  if (!is_bridgeless(g)) throw Error(ErrorCode::bridged, "classification needs a bridgeless graph");
  ClosedSetLimits lim;
  lim.max_states = f.budget;
  std::string line;
  try {
    auto cs = closed_irreducible_set(g, lim);
    if (cs) {
      out["class"] = 2;
      out["closed_set_size"] = cs->members.size();
      out["min_variables"] = cs->min_variables;
      out["states_tested"] = cs->states_tested;
      Json members = Json::array();
      for (const auto& m : cs->members) members.push_back(m.edges);
      out["closed_set"] = std::move(members);
      line = "Class 2; closed irreducible set of " + std::to_string(cs->members.size()) + " configurations";
    } else {
      out["class"] = 1;
      line = "Class 1; some configuration reduces";
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::limits_exceeded) throw;
    bool colorable = is_three_edge_colorable(g);
    out["class"] = colorable ? 1 : 2;
    out["closed_set_size"] = nullptr;
    line = std::string(colorable ? "Class 1" : "Class 2") + "; closed set beyond limits, decided by exhaustive edge coloring";
  }
  out["summary"] = line;
  if (f.format == "text")
    std::cout << line << "\n";
  else
    emit(out);
  return kOk;
}

int cmd_fourcolor(const std::string& input, const Flags& f) {
  Source src = load(input);
  const auto& g = src.graph.graph;
  RotationSystem rot = embedding_of(src.graph);
  auto res = three_edge_color_planar(g, rot);
  auto fc = four_color_faces(g, rot, res.coloring);
  Json out = envelope("fourcolor", f, src.text);
  out["face_colors"] = fc.colors;
  Json faces = Json::array();
  for (const auto& face : enumerate_faces(g, rot)) faces.push_back(face.edge_ids());
  out["faces"] = std::move(faces);
  out["conflicts"] = face_conflicts(g, rot, fc);
  emit(out);
  return out["conflicts"].get<int>() == 0 ? kOk : kImproper;
}

int cmd_generate(int n, const std::string& growth, const Flags& f) {
  auto eg = generate_random_cubic_planar(n, f.seed, parse_growth_policy(growth));
  if (f.format == "graph6")
    std::cout << to_graph6(eg.graph) << "\n";
  else if (f.format == "dot" || f.dot)
    std::cout << to_dot(eg.graph);
  else
    emit(graph_to_json(eg.graph, &eg.rotation));
  return kOk;
}

int cmd_faces(const std::string& input, const Flags& f) {
  Source src = load(input);
  const auto& g = src.graph.graph;
  RotationSystem rot = embedding_of(src.graph);
  auto faces = enumerate_faces(g, rot);
  Json out = envelope("faces", f, src.text);
  Json list = Json::array();
  for (const auto& face : faces) list.push_back({{"length", face.length()}, {"edges", face.edge_ids()}, {"vertices", face.vertices(g)}});
  out["vertices"] = g.num_vertices();
  out["edges"] = g.num_edges();
  out["faces"] = std::move(list);
  out["euler_characteristic"] = euler_characteristic(g, rot);
  out["girth"] = girth(g);
  out["min_face"] = min_face(faces).edge_ids();
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-coloring toolkit for cubic graphs"};
  app.require_subcommand(1);
  Flags f;
  if (const char* w = std::getenv("KEMPE_WORKERS")) {
    try {
      f.workers = std::max(1, std::stoi(w));
    } catch (const std::logic_error&) {
    }
  }
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--budget", f.budget, "state / step budget");
    sub->add_option("--workers", f.workers, "worker threads (default $KEMPE_WORKERS or 1)");
    sub->add_flag("--dot", f.dot, "emit DOT instead of JSON");
    sub->add_flag("--non-planar", f.non_planar, "use the random-walk solver");
    sub->add_flag("--include-even-ab-negations", f.include_even, "search the full state space");
    sub->add_option("--format", f.format, "json | dot | graph6 | text");
    sub->add_flag("--no-timing", f.no_timing, "omit wall-clock data");
  };

  std::string input, second;
  auto* color = app.add_subcommand("color", "3-edge-color a graph");
  color->add_option("input", input, "file, gen:n=..:seed=.. or fixture name")->required();
  common(color);

  auto* verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("input", input, "coloring JSON, or graph file followed by coloring JSON")->required();
  verify->add_option("coloring", second);
  common(verify);

  ExperimentSpec spec;
  std::string growth = "pentagonal";
  auto* experiment = app.add_subcommand("experiment", "run the reducibility experiment");
  experiment->add_option("--count", spec.count);
  experiment->add_option("--min-n", spec.min_vertices);
  experiment->add_option("--max-n", spec.max_vertices);
  experiment->add_option("--growth", growth, "uniform | pentagonal");
  experiment->add_option("--census-budget", spec.census_budget);
  experiment->add_option("--census-stride", spec.census_stride);
  experiment->add_option("--probes", spec.pentagon_probes, "pentagon lifts forced per instance");
  experiment->add_option("--fixture", spec.fixture, "test a fixture graph instead of generated ones");
  experiment->add_option("--output", spec.output);
  common(experiment);

  auto* contract = app.add_subcommand("contract", "contract a snark configuration onto the Petersen graph");
  contract->add_option("input", input)->required();
  common(contract);

  auto* classify = app.add_subcommand("classify", "decide Class 1 / Class 2 via closed irreducible sets");
  classify->add_option("input", input)->required();
  common(classify);

  auto* fourcolor = app.add_subcommand("fourcolor", "4-color the faces of a planar cubic graph");
  fourcolor->add_option("input", input)->required();
  common(fourcolor);

  int n = 20;
  auto* generate = app.add_subcommand("generate", "generate a random cubic planar graph");
  generate->add_option("--n", n)->required();
  generate->add_option("--growth", growth, "uniform | pentagonal");
  common(generate);

  auto* faces = app.add_subcommand("faces", "list the faces of a planar embedding");
  faces->add_option("input", input)->required();
  common(faces);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*color) return cmd_color(input, f);
    if (*verify) return cmd_verify(input, second, f);
    if (*experiment) {
      if (experiment->count("--seed")) spec.seed = f.seed;
      spec.growth = parse_growth_policy(growth);
      spec.include_even_ab_negations = f.include_even;
      if (experiment->count("--budget")) spec.petersen_budget = f.budget;
      return cmd_experiment(spec, f);
    }
    if (*contract) return cmd_contract(input, f);
    if (*classify) return cmd_classify(input, f);
    if (*fourcolor) return cmd_fourcolor(input, f);
    if (*generate) return cmd_generate(n, growth, f);
    if (*faces) return cmd_faces(input, f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
