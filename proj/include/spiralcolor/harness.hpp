#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spiralcolor/coloring.hpp"
#include "spiralcolor/generators.hpp"
#include "spiralcolor/oracle.hpp"
#include "spiralcolor/spiral.hpp"

namespace spiralcolor {

/// Process exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int not_g6 = 1;         // also: verify found violations
inline constexpr int malformed = 2;      // unreadable input, bad embedding, bad usage
inline constexpr int color_failure = 3;  // heuristic failure; oracle: not colorable
inline constexpr int budget_exhausted = 4;
}  // namespace exit_code

enum class GeneratorKind { random_g6, hexagon_triangles, three_triangles_hub };
enum class StartSweep { default_only, all_outer };
enum class OrientationSweep { cw, ccw, both };

GeneratorKind parse_generator(const std::string& name);

struct RunConfig {
  GeneratorKind generator = GeneratorKind::random_g6;
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_count = 100;
  int n_min = 10;
  int n_max = 40;
  std::optional<double> attach_probability;  // unset: drawn per seed from {0, 0.1, ..., 1}
  StartSweep starts = StartSweep::default_only;
  OrientationSweep orientations = OrientationSweep::cw;
  std::uint64_t oracle_budget = kDefaultNodeBudget;
  int workers = 1;
  bool strict = false;

  /// Throws std::invalid_argument on an empty seed range, workers < 1,
  /// n_min > n_max, n_min < 3, or a zero budget.
  void validate() const;
  ForbiddenCycles forbidden() const {
    return strict ? ForbiddenCycles::strict() : ForbiddenCycles::standard();
  }
};

struct InstanceParams {
  int n = 0;
  double attach_probability = 0.0;
};

InstanceParams params_for_seed(const RunConfig& config, std::uint64_t seed);
Instance make_instance(const RunConfig& config, std::uint64_t seed);

/// (start, orientation) pairs swept for one graph under `config`.
std::vector<std::pair<VertexId, Orientation>> sweep_runs(const RunConfig& config, const PlanarGraph& g);

struct HuntRecord {
  std::uint64_t seed = 0;
  int n = 0;
  double attach_probability = 0.0;
  VertexId start = -1;
  Orientation orientation = Orientation::clockwise;
  std::optional<CrossCheck> category;  // unset: per-instance error
  std::string error;
  ColorCounts counts{0, 0, 0};
  std::optional<FailureCertificate> certificate;
  std::optional<OracleVerdict::Kind> oracle;
  std::uint64_t oracle_nodes = 0;
};

Json record_to_json(const HuntRecord& record, const RunConfig& config);

struct HuntReport {
  std::size_t instances_tested = 0;
  std::size_t runs = 0;
  std::size_t consistent_successes = 0;
  std::vector<HuntRecord> heuristic_incomplete;
  std::vector<HuntRecord> counterexample_candidates;
  std::size_t inconclusive = 0;
  std::size_t errors = 0;
  double wall_time = 0.0;
  std::vector<HuntRecord> records;  // ordered by (seed, sweep position)

  Json summary_json() const;
  /// One JSON record per line; identical for any worker count.
  std::string records_ndjson(const RunConfig& config) const;
};

/// Generates each seeded instance, colors it for every swept (start,
/// orientation), runs the oracle on instances with a failed run, and
/// classifies every run.
HuntReport hunt(const RunConfig& config);

struct BenchRow {
  int n = 0;
  std::size_t edges = 0;
  double median_seconds = 0.0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
  int repeats = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double exponent = 0.0;  // least-squares slope of log(time) against log(n)
  bool monotone = true;
};

std::vector<Instance> bench_corpus(std::span<const int> sizes, std::uint64_t seed, double attach_probability);

/// Times decompose + color (default start and orientation) on each
/// instance. Throws std::invalid_argument on an empty corpus.
BenchReport bench(const std::vector<Instance>& corpus, int repeats = 5);

double fit_loglog_exponent(std::span<const BenchRow> rows);

/// The command-line front end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spiralcolor
