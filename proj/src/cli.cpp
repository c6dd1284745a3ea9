#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "spiralcolor/harness.hpp"
#include "spiralcolor/serialize.hpp"

namespace spiralcolor {

namespace {

namespace fs = std::filesystem;

// Graph source shared by the subcommands: a file, or a generator call.
struct InputOptions {
  std::string path;
  std::string generator;
  std::uint64_t seed = 0;
  int n = 30;
  double p = 0.3;
  int triangles = 6;
  bool strict = false;

  ForbiddenCycles forbidden() const {
    return strict ? ForbiddenCycles::strict() : ForbiddenCycles::standard();
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input,-i", in.path, "graph or instance JSON file");
  cmd->add_option("--generator", in.generator, "generate instead of reading: random, hexagon, hub");
  cmd->add_option("--seed", in.seed, "generator seed");
  cmd->add_option("--n", in.n, "vertex count for the random generator");
  cmd->add_option("--p", in.p, "triangle attach probability for the random generator");
  cmd->add_option("--triangles", in.triangles, "attached triangles for the hexagon gadget (0..6)");
  cmd->add_flag("--strict-g6", in.strict, "also forbid 6-cycles");
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_instance(const InputOptions& in) {
  if (!in.path.empty()) return instance_from_json(read_json_file(in.path));
  if (in.generator.empty()) throw UsageError("give --input PATH or --generator NAME");
  switch (parse_generator(in.generator)) {
    case GeneratorKind::hexagon_triangles: return gadget_hexagon_triangles(in.triangles);
    case GeneratorKind::three_triangles_hub: return gadget_three_triangles_hub();
    case GeneratorKind::random_g6: break;
  }
  return gen_random_g6(in.n, in.p, in.seed, in.forbidden());
}

struct RunChoice {
  std::optional<VertexId> start;
  std::string orientation = "cw";
};

void add_run_options(CLI::App* cmd, RunChoice& run) {
  cmd->add_option("--start", run.start, "start vertex on the outer face (default: smallest id)");
  cmd->add_option("--orientation", run.orientation, "cw or ccw")->check(CLI::IsMember({"cw", "ccw"}));
}

SpiralDecomposition decompose_with(const PlanarGraph& g, const RunChoice& run) {
  return decompose(g, run.start.value_or(default_start(g)), parse_orientation(run.orientation));
}

void emit(std::ostream& out, const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    out << text;
  } else {
    write_text_file(output_path, text);
  }
}

std::string cycle_text(const std::vector<VertexId>& cycle) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
  return os.str();
}

int cmd_validate(const InputOptions& in, std::ostream& out) {
  Instance inst = load_instance(in);
  const PlanarGraph& g = inst.graph;
  const auto lengths = in.forbidden();
  const CycleReport report = find_short_cycles(g, lengths);
  const auto pairs = adjacent_triangle_pairs(g);
  out << "embedding: valid\n";
  out << "vertices: " << g.vertex_count() << " edges: " << g.edge_count() << " faces: " << g.faces().size()
      << " euler: " << (g.vertex_count() - static_cast<long>(g.edge_count()) + static_cast<long>(g.faces().size()))
      << "\n";
  out << "outer face: " << cycle_text({g.outer_face().begin(), g.outer_face().end()}) << "\n";
  out << "triangles: " << triangles_of(g).size() << "\n";
  out << "forbidden cycles (" << lengths.min_length << "-" << lengths.max_length << "): " << report.cycles.size()
      << "\n";
  for (const auto& c : report.cycles) out << "  cycle: " << cycle_text(c) << "\n";
  out << "adjacent triangle pairs: " << pairs.size() << "\n";
  const bool member = report.empty();
  out << "G6: " << (member ? "yes" : "no") << "\n";
  return member ? exit_code::ok : exit_code::not_g6;
}

// Coloring subcommands require class membership first.
int require_g6(const PlanarGraph& g, const InputOptions& in, std::ostream& err) {
  const CycleReport report = find_short_cycles(g, in.forbidden());
  if (report.empty()) return exit_code::ok;
  err << "error: input has " << report.cycles.size() << " forbidden cycle(s), e.g. " << cycle_text(report.cycles[0])
      << "\n";
  return exit_code::not_g6;
}

int cmd_decompose(const InputOptions& in, const RunChoice& run, const std::string& output, std::ostream& out) {
  Instance inst = load_instance(in);
  emit(out, output, decomposition_to_json(decompose_with(inst.graph, run)).dump() + "\n");
  return exit_code::ok;
}

int cmd_color(const InputOptions& in, const RunChoice& run, bool trace, const std::string& output,
              std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(in);
  if (int rc = require_g6(inst.graph, in, err); rc != exit_code::ok) return rc;
  ColoringOutcome outcome = color(inst.graph, decompose_with(inst.graph, run));
  emit(out, output, outcome_to_json(outcome, trace).dump() + "\n");
  return outcome.ok() ? exit_code::ok : exit_code::color_failure;
}

int cmd_verify(const InputOptions& in, const std::string& coloring_path, std::ostream& out) {
  Instance inst = load_instance(in);
  Coloring c = coloring_from_json(read_json_file(coloring_path));
  std::vector<ViolatedEdge> bad;
  try {
    bad = verify(inst.graph, c);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  Json doc;
  doc["proper"] = bad.empty();
  Json edges = Json::array();
  for (const auto& e : bad) edges.push_back({e.u, e.v});
  doc["violations"] = std::move(edges);
  out << doc.dump() << "\n";
  return bad.empty() ? exit_code::ok : exit_code::not_g6;
}

int cmd_oracle(const InputOptions& in, std::uint64_t budget, std::ostream& out) {
  Instance inst = load_instance(in);
  OracleVerdict v = exact_3color(inst.graph, budget);
  out << verdict_to_json(v).dump() << "\n";
  switch (v.kind) {
    case OracleVerdict::Kind::colorable: return exit_code::ok;
    case OracleVerdict::Kind::not_colorable: return exit_code::color_failure;
    case OracleVerdict::Kind::budget_exhausted: return exit_code::budget_exhausted;
  }
  return exit_code::ok;
}

int cmd_gen(InputOptions in, std::uint64_t count, const std::string& out_dir, const std::string& output,
            std::ostream& out) {
  if (in.generator.empty()) in.generator = "random";
  if (count <= 1 && out_dir.empty()) {
    emit(out, output, instance_to_json(load_instance(in)).dump() + "\n");
    return exit_code::ok;
  }
  if (out_dir.empty()) throw UsageError("--count > 1 needs --out DIR");
  fs::create_directories(out_dir);
  Json manifest;
  manifest["generator"] = in.generator;
  manifest["version"] = kGeneratorVersion;
  manifest["params"] = {{"n", in.n}, {"attach_probability", in.p}, {"strict", in.strict}};
  Json files = Json::array();
  Json seeds = Json::array();
  const std::uint64_t total = std::max<std::uint64_t>(count, 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    InputOptions one = in;
    one.seed = in.seed + i;
    Instance inst = load_instance(one);
    const std::string name = "instance_" + seed_label(inst.seed) + ".json";
    std::string safe = name;
    std::replace(safe.begin(), safe.end(), ':', '_');
    write_text_file((fs::path(out_dir) / safe).string(), instance_to_json(inst).dump() + "\n");
    files.push_back(safe);
    seeds.push_back(one.seed);
  }
  manifest["seeds"] = std::move(seeds);
  manifest["files"] = std::move(files);
  write_text_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  out << "wrote " << total << " instance(s) to " << out_dir << "\n";
  return exit_code::ok;
}

int cmd_hunt(const RunConfig& config, const std::string& output, std::ostream& out) {
  HuntReport report = hunt(config);
  if (!output.empty()) {
    write_text_file(output, report.records_ndjson(config) + report.summary_json().dump() + "\n");
  }
  out << report.summary_json().dump(2) << "\n";
  return exit_code::ok;
}

int cmd_bench(const std::vector<int>& sizes, const std::string& corpus_dir, std::uint64_t seed, double p,
              int repeats, std::ostream& out) {
  std::vector<Instance> corpus;
  if (!corpus_dir.empty()) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
      if (entry.path().extension() == ".json" && entry.path().filename() != "manifest.json") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) corpus.push_back(instance_from_json(read_json_file(path.string())));
  } else {
    corpus = bench_corpus(sizes, seed, p);
  }
  BenchReport report = bench(corpus, repeats);
  out << std::left << std::setw(10) << "n" << std::setw(10) << "edges" << std::setw(14) << "median_s" << std::setw(14)
      << "mean_s" << "stddev_s\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(10) << row.n << std::setw(10) << row.edges << std::setw(14) << row.median_seconds
        << std::setw(14) << row.mean_seconds << row.stddev_seconds << "\n";
  }
  out << "exponent: " << report.exponent << "\n";
  out << "monotone: " << (report.monotone ? "yes" : "no") << "\n";
  const bool near_linear = report.rows.size() < 2 || report.exponent < 1.5;
  out << "near-linear: " << (near_linear ? "yes" : "no") << "\n";
  return near_linear ? exit_code::ok : exit_code::not_g6;
}

int cmd_export_dot(const InputOptions& in, const RunChoice& run, bool no_color, const std::string& output,
                   std::ostream& out) {
  Instance inst = load_instance(in);
  SpiralDecomposition d = decompose_with(inst.graph, run);
  std::optional<ColoringOutcome> outcome;
  if (!no_color) outcome = color(inst.graph, d);
  emit(out, output, to_dot(inst.graph, d, outcome));
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spiral-chain 3-coloring of plane graphs without 4- and 5-cycles", "spiralcolor"};
  app.require_subcommand(1);

  InputOptions in;
  RunChoice run;
  std::string output;
  bool trace = false;
  bool no_color = false;
  std::string coloring_path;
  std::uint64_t budget = kDefaultNodeBudget;
  std::uint64_t count = 1;
  std::string out_dir;

  auto* validate = app.add_subcommand("validate", "check the embedding and class membership");
  add_input_options(validate, in);

  auto* decompose_cmd = app.add_subcommand("decompose", "print the spiral-chain decomposition");
  add_input_options(decompose_cmd, in);
  add_run_options(decompose_cmd, run);
  decompose_cmd->add_option("--output,-o", output);

  auto* color_cmd = app.add_subcommand("color", "decompose and color; exit 3 on failure");
  add_input_options(color_cmd, in);
  add_run_options(color_cmd, run);
  color_cmd->add_flag("--trace", trace, "include the processing trace");
  color_cmd->add_option("--output,-o", output);

  auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
  add_input_options(verify_cmd, in);
  verify_cmd->add_option("--coloring,-c", coloring_path, "outcome or verdict JSON")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exact 3-colorability");
  add_input_options(oracle_cmd, in);
  oracle_cmd->add_option("--oracle-budget", budget, "backtracking node budget");

  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  add_input_options(gen_cmd, in);
  gen_cmd->add_option("--count", count, "number of consecutive seeds");
  gen_cmd->add_option("--out", out_dir, "corpus directory (instances + manifest.json)");
  gen_cmd->add_option("--output,-o", output, "single-instance output file");

  RunConfig config;
  std::string generator = "random";
  std::string sweep = "default";
  std::string orientations = "cw";
  std::optional<double> hunt_p;
  auto* hunt_cmd = app.add_subcommand("hunt", "seeded search for heuristic failures and counterexamples");
  hunt_cmd->add_option("--generator", generator, "random, hexagon, hub");
  hunt_cmd->add_option("--seed", config.seed_begin, "first seed");
  hunt_cmd->add_option("--count", config.seed_count, "number of seeds");
  hunt_cmd->add_option("--n-min", config.n_min);
  hunt_cmd->add_option("--n-max", config.n_max);
  hunt_cmd->add_option("--p", hunt_p, "fixed attach probability (default: mixed per seed)");
  hunt_cmd->add_option("--sweep", sweep, "default or all (every outer-face start)")->check(CLI::IsMember({"default", "all"}));
  hunt_cmd->add_option("--orientation", orientations, "cw, ccw or both")->check(CLI::IsMember({"cw", "ccw", "both"}));
  hunt_cmd->add_option("--workers", config.workers);
  hunt_cmd->add_option("--oracle-budget", config.oracle_budget);
  hunt_cmd->add_flag("--strict-g6", config.strict);
  hunt_cmd->add_option("--output,-o", output, "NDJSON records followed by the summary");

  std::vector<int> sizes{100, 1000, 10000};
  std::string corpus_dir;
  std::uint64_t bench_seed = 1;
  double bench_p = 0.3;
  int repeats = 5;
  auto* bench_cmd = app.add_subcommand("bench", "time decompose + color against n");
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--corpus", corpus_dir, "directory of instance files");
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--p", bench_p);
  bench_cmd->add_option("--repeats", repeats);

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output with chain indices and colors");
  add_input_options(dot_cmd, in);
  add_run_options(dot_cmd, run);
  dot_cmd->add_flag("--no-color", no_color, "decompose only");
  dot_cmd->add_option("--output,-o", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::malformed;
  }

  try {
    if (*validate) return cmd_validate(in, out);
    if (*decompose_cmd) return cmd_decompose(in, run, output, out);
    if (*color_cmd) return cmd_color(in, run, trace, output, out, err);
    if (*verify_cmd) return cmd_verify(in, coloring_path, out);
    if (*oracle_cmd) return cmd_oracle(in, budget, out);
    if (*gen_cmd) return cmd_gen(in, count, out_dir, output, out);
    if (*hunt_cmd) {
      config.generator = parse_generator(generator);
      config.attach_probability = hunt_p;
      config.starts = sweep == "all" ? StartSweep::all_outer : StartSweep::default_only;
      config.orientations = orientations == "both" ? OrientationSweep::both
                            : orientations == "ccw" ? OrientationSweep::ccw
                                                    : OrientationSweep::cw;
      config.validate();
      return cmd_hunt(config, output, out);
    }
    if (*bench_cmd) return cmd_bench(sizes, corpus_dir, bench_seed, bench_p, repeats, out);
    if (*dot_cmd) return cmd_export_dot(in, run, no_color, output, out);
  } catch (const GraphError& e) {
    if (*validate) out << "embedding: invalid (" << to_string(e.kind()) << ": " << e.what() << ")\n";
    err << "error: " << e.what() << "\n";
    return exit_code::malformed;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::malformed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::malformed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::malformed;
  }
  return exit_code::malformed;
}

}  // namespace spiralcolor
