#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spiralcolor/harness.hpp"
#include "spiralcolor/serialize.hpp"

namespace spiralcolor {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

const char* generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::random_g6: return "random";
    case GeneratorKind::hexagon_triangles: return "hexagon";
    case GeneratorKind::three_triangles_hub: return "hub";
  }
  return "random";
}

}  // namespace

GeneratorKind parse_generator(const std::string& name) {
  if (name == "random" || name == "random_g6") return GeneratorKind::random_g6;
  if (name == "hexagon" || name == "hexagon_triangles") return GeneratorKind::hexagon_triangles;
  if (name == "hub" || name == "three_triangles_hub") return GeneratorKind::three_triangles_hub;
  throw std::invalid_argument("unknown generator '" + name + "' (random, hexagon, hub)");
}

void RunConfig::validate() const {
  if (seed_count == 0) throw std::invalid_argument("seed range is empty");
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (n_min < 3 || n_min > n_max) throw std::invalid_argument("need 3 <= n_min <= n_max");
  if (oracle_budget == 0) throw std::invalid_argument("oracle budget must be positive");
  if (attach_probability && !(*attach_probability >= 0.0 && *attach_probability <= 1.0)) {
    throw std::invalid_argument("attach probability must lie in [0, 1]");
  }
}

InstanceParams params_for_seed(const RunConfig& config, std::uint64_t seed) {
  InstanceParams p;
  const auto span = static_cast<std::uint64_t>(config.n_max - config.n_min + 1);
  p.n = config.n_min + static_cast<int>(splitmix64(seed) % span);
  p.attach_probability = config.attach_probability
                             ? *config.attach_probability
                             : static_cast<double>(splitmix64(seed ^ 0x5bd1e995ull) % 11) / 10.0;
  return p;
}

Instance make_instance(const RunConfig& config, std::uint64_t seed) {
  switch (config.generator) {
    case GeneratorKind::hexagon_triangles: return gadget_hexagon_triangles(6);
    case GeneratorKind::three_triangles_hub: return gadget_three_triangles_hub();
    case GeneratorKind::random_g6: break;
  }
  const InstanceParams p = params_for_seed(config, seed);
  return gen_random_g6(p.n, p.attach_probability, seed, config.forbidden());
}

std::vector<std::pair<VertexId, Orientation>> sweep_runs(const RunConfig& config, const PlanarGraph& g) {
  std::vector<VertexId> starts;
  if (config.starts == StartSweep::default_only) {
    starts.push_back(default_start(g));
  } else {
    starts.assign(g.outer_face().begin(), g.outer_face().end());
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  }
  std::vector<Orientation> orientations;
  if (config.orientations != OrientationSweep::ccw) orientations.push_back(Orientation::clockwise);
  if (config.orientations != OrientationSweep::cw) orientations.push_back(Orientation::counterclockwise);
  std::vector<std::pair<VertexId, Orientation>> runs;
  for (VertexId s : starts) {
    for (Orientation o : orientations) runs.emplace_back(s, o);
  }
  return runs;
}

namespace {

std::string replay_command(const HuntRecord& r, const RunConfig& config) {
  std::ostringstream os;
  os << "spiralcolor color --generator " << generator_name(config.generator);
  if (config.generator == GeneratorKind::random_g6) {
    os << " --seed " << r.seed << " --n " << r.n << " --p " << Json(r.attach_probability).dump();
    if (config.strict) os << " --strict-g6";
  }
  os << " --start " << r.start << " --orientation " << to_string(r.orientation);
  return os.str();
}

std::vector<HuntRecord> run_seed(const RunConfig& config, std::uint64_t seed) {
  std::vector<HuntRecord> records;
  HuntRecord base;
  base.seed = seed;
  try {
    Instance instance = make_instance(config, seed);
    const PlanarGraph& g = instance.graph;
    base.n = g.vertex_count();
    base.attach_probability =
        config.generator == GeneratorKind::random_g6 ? params_for_seed(config, seed).attach_probability : 0.0;

    const auto runs = sweep_runs(config, g);
    std::vector<ColoringOutcome> outcomes;
    outcomes.reserve(runs.size());
    bool any_failure = false;
    for (const auto& [start, orientation] : runs) {
      outcomes.push_back(color(g, decompose(g, start, orientation)));
      any_failure = any_failure || !outcomes.back().ok();
    }
    std::optional<OracleVerdict> verdict;
    if (any_failure) verdict = exact_3color(g, config.oracle_budget);

    for (std::size_t i = 0; i < runs.size(); ++i) {
      HuntRecord r = base;
      r.start = runs[i].first;
      r.orientation = runs[i].second;
      const ColoringOutcome& out = outcomes[i];
      r.counts = out.counts;
      r.certificate = out.certificate;
      if (out.ok()) {
        r.category = cross_check(g, out, OracleVerdict::colorable(out.colors, g.fingerprint()), config.forbidden());
      } else {
        r.oracle = verdict->kind;
        r.oracle_nodes = verdict->nodes_explored;
        r.category = cross_check(g, out, *verdict, config.forbidden());
      }
      records.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    HuntRecord r = base;
    r.error = e.what();
    records.assign(1, std::move(r));
  }
  return records;
}

}  // namespace

Json record_to_json(const HuntRecord& r, const RunConfig& config) {
  Json doc;
  doc["seed"] = r.seed;
  if (!r.category) {
    doc["category"] = "error";
    doc["error"] = r.error;
    return doc;
  }
  doc["n"] = r.n;
  doc["attach_probability"] = r.attach_probability;
  doc["start"] = r.start;
  doc["orientation"] = std::string(to_string(r.orientation));
  doc["category"] = std::string(to_string(*r.category));
  doc["counts"] = r.counts;
  doc["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
  doc["oracle"] = r.oracle ? Json(std::string(to_string(*r.oracle))) : Json(nullptr);
  doc["oracle_nodes"] = r.oracle_nodes;
  doc["replay"] = replay_command(r, config);
  return doc;
}

Json HuntReport::summary_json() const {
  auto brief = [](const std::vector<HuntRecord>& list) {
    Json arr = Json::array();
    for (const auto& r : list) {
      arr.push_back({{"seed", r.seed}, {"start", r.start}, {"orientation", std::string(to_string(r.orientation))}});
    }
    return arr;
  };
  Json doc;
  doc["summary"] = true;
  doc["instances_tested"] = instances_tested;
  doc["runs"] = runs;
  doc["consistent_successes"] = consistent_successes;
  doc["heuristic_incomplete"] = heuristic_incomplete.size();
  doc["counterexample_candidates"] = counterexample_candidates.size();
  doc["inconclusive"] = inconclusive;
  doc["errors"] = errors;
  const double denom = runs == 0 ? 1.0 : static_cast<double>(runs);
  doc["heuristic_incomplete_rate"] = static_cast<double>(heuristic_incomplete.size()) / denom;
  doc["counterexample_candidate_rate"] = static_cast<double>(counterexample_candidates.size()) / denom;
  doc["heuristic_incomplete_runs"] = brief(heuristic_incomplete);
  doc["counterexample_candidate_runs"] = brief(counterexample_candidates);
  doc["wall_time"] = wall_time;
  return doc;
}

std::string HuntReport::records_ndjson(const RunConfig& config) const {
  std::string out;
  for (const auto& r : records) {
    out += record_to_json(r, config).dump();
    out += '\n';
  }
  return out;
}

HuntReport hunt(const RunConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t count = static_cast<std::size_t>(config.seed_count);
  std::vector<std::vector<HuntRecord>> per_seed(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) per_seed[i] = run_seed(config, config.seed_begin + i);
  };
  const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(config.workers), count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  HuntReport report;
  report.instances_tested = count;
  for (auto& records : per_seed) {
    for (auto& r : records) {
      if (!r.category) {
        ++report.errors;
      } else {
        ++report.runs;
        switch (*r.category) {
          case CrossCheck::consistent_success: ++report.consistent_successes; break;
          case CrossCheck::heuristic_incomplete: report.heuristic_incomplete.push_back(r); break;
          case CrossCheck::counterexample_candidate: report.counterexample_candidates.push_back(r); break;
          case CrossCheck::inconclusive: ++report.inconclusive; break;
        }
      }
      report.records.push_back(std::move(r));
    }
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<Instance> bench_corpus(std::span<const int> sizes, std::uint64_t seed, double attach_probability) {
  std::vector<Instance> corpus;
  for (int n : sizes) corpus.push_back(gen_random_g6(n, attach_probability, seed));
  return corpus;
}

double fit_loglog_exponent(std::span<const BenchRow> rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (r.n > 0 && r.median_seconds > 0.0) pts.emplace_back(std::log(r.n), std::log(r.median_seconds));
  }
  if (pts.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (auto [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

BenchReport bench(const std::vector<Instance>& corpus, int repeats) {
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  BenchReport report;
  for (const auto& instance : corpus) {
    const PlanarGraph& g = instance.graph;
    std::vector<double> samples;
    for (int i = 0; i < repeats; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      auto d = decompose(g, default_start(g));
      auto outcome = color(g, d);
      const auto t1 = std::chrono::steady_clock::now();
      if (outcome.colors.size() != static_cast<std::size_t>(g.vertex_count())) throw std::logic_error("bad outcome");
      samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    BenchRow row;
    row.n = g.vertex_count();
    row.edges = g.edge_count();
    row.repeats = repeats;
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    row.median_seconds = sorted[sorted.size() / 2];
    row.mean_seconds = std::accumulate(samples.begin(), samples.end(), 0.0) / repeats;
    double var = 0;
    for (double s : samples) var += (s - row.mean_seconds) * (s - row.mean_seconds);
    row.stddev_seconds = repeats > 1 ? std::sqrt(var / (repeats - 1)) : 0.0;
    report.rows.push_back(row);
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].median_seconds < report.rows[i - 1].median_seconds) report.monotone = false;
  }
  report.exponent = fit_loglog_exponent(report.rows);
  return report;
}

}  // namespace spiralcolor
