#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "spiralcolor/generators.hpp"
#include "spiralcolor/harness.hpp"
#include "spiralcolor/serialize.hpp"
#include "test_support.hpp"

using namespace spiralcolor;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> parts;
  for (std::string w; is >> w;) parts.push_back(w);
  return parts;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("spiralcolor_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig small_config() {
  RunConfig config;
  config.seed_begin = 0;
  config.seed_count = 120;
  config.n_min = 8;
  config.n_max = 35;
  return config;
}

}  // namespace

TEST_CASE("hunt accounting") {
  auto config = small_config();
  auto report = hunt(config);
  CHECK(report.instances_tested == 120);
  CHECK(report.runs == 120);
  CHECK(report.records.size() == report.runs);
  CHECK(report.consistent_successes + report.heuristic_incomplete.size() + report.counterexample_candidates.size() +
            report.inconclusive + report.errors ==
        report.runs);
  for (std::size_t i = 1; i < report.records.size(); ++i) CHECK(report.records[i - 1].seed < report.records[i].seed);
  for (const auto& r : report.heuristic_incomplete) {
    REQUIRE(r.certificate.has_value());
    CHECK(r.oracle == OracleVerdict::Kind::colorable);
  }
}

TEST_CASE("hunt sweeps starts and orientations") {
  auto config = small_config();
  config.seed_count = 20;
  config.starts = StartSweep::all_outer;
  config.orientations = OrientationSweep::both;
  auto report = hunt(config);
  std::size_t expected = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto inst = make_instance(config, s);
    expected += sweep_runs(config, inst.graph).size();
  }
  CHECK(report.runs == expected);
  CHECK(report.runs > 2 * 20);
}

TEST_CASE("hunt records do not depend on the worker count") {
  auto config = small_config();
  config.workers = 1;
  auto one = hunt(config).records_ndjson(config);
  config.workers = 4;
  auto four = hunt(config).records_ndjson(config);
  CHECK(one == four);
  CHECK_FALSE(one.empty());
}

TEST_CASE("gadget hunt is one consistent success") {
  RunConfig config;
  config.generator = GeneratorKind::hexagon_triangles;
  config.seed_count = 1;
  auto report = hunt(config);
  CHECK(report.runs == 1);
  CHECK(report.consistent_successes == 1);
  CHECK(report.records[0].counts == ColorCounts{3, 3, 6});
}

TEST_CASE("params per seed are reproducible and in range") {
  auto config = small_config();
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto p = params_for_seed(config, s);
    CHECK(p.n >= config.n_min);
    CHECK(p.n <= config.n_max);
    CHECK(p.attach_probability >= 0.0);
    CHECK(p.attach_probability <= 1.0);
    auto q = params_for_seed(config, s);
    CHECK(p.n == q.n);
    CHECK(p.attach_probability == q.attach_probability);
  }
  config.attach_probability = 0.25;
  CHECK(params_for_seed(config, 3).attach_probability == 0.25);
}

TEST_CASE("run config validation") {
  RunConfig config;
  config.seed_count = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = RunConfig{};
  config.workers = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = RunConfig{};
  config.n_min = 50;
  config.n_max = 40;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  CHECK_NOTHROW(RunConfig{}.validate());
}

TEST_CASE("replay string reproduces a recorded failure") {
  auto config = small_config();
  auto report = hunt(config);
  REQUIRE_FALSE(report.heuristic_incomplete.empty());
  const auto& rec = report.heuristic_incomplete.front();
  auto doc = record_to_json(rec, config);
  auto args = split(doc["replay"].get<std::string>());
  REQUIRE(args.front() == "spiralcolor");
  args.erase(args.begin());
  auto res = cli(args);
  CHECK(res.code == exit_code::color_failure);
  auto outcome = parse_json(res.out);
  CHECK(outcome["status"] == "failure");
  CHECK(outcome["certificate"] == certificate_to_json(*rec.certificate));
}

TEST_CASE("bench") {
  CHECK_THROWS_AS(bench({}), std::invalid_argument);
  std::vector<int> sizes{200, 2000};
  auto corpus = bench_corpus(sizes, 1, 0.3);
  REQUIRE(corpus.size() == 2);
  auto report = bench(corpus, 3);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].n == 200);
  CHECK(report.rows[1].median_seconds > 0.0);
  std::vector<BenchRow> rows{{100, 0, 1.0, 0, 0, 1}, {1000, 0, 10.0, 0, 0, 1}, {10000, 0, 100.0, 0, 0, 1}};
  CHECK(fit_loglog_exponent(rows) == doctest::Approx(1.0));
}

TEST_CASE("cli: validate") {
  auto ok = cli({"validate", "--generator", "hexagon"});
  CHECK(ok.code == exit_code::ok);
  CHECK(ok.out.find("G6: yes") != std::string::npos);
  CHECK(ok.out.find("triangles: 6") != std::string::npos);

  auto dir = scratch_dir("validate");
  auto c4 = (dir / "c4.json").string();
  write_text_file(c4, R"({"n":4,"rotation":[[1,3],[2,0],[3,1],[0,2]],"outer_face":[0,1,2,3]})");
  auto bad = cli({"validate", "-i", c4});
  CHECK(bad.code == exit_code::not_g6);
  CHECK(bad.out.find("cycle: 0 1 2 3") != std::string::npos);
  CHECK(cli({"color", "-i", c4}).code == exit_code::not_g6);

  auto broken = (dir / "broken.json").string();
  write_text_file(broken, "{\"n\": 3, ");
  CHECK(cli({"validate", "-i", broken}).code == exit_code::malformed);
  auto asym = (dir / "asym.json").string();
  write_text_file(asym, R"({"n":3,"rotation":[[1,2],[2],[0,1]],"outer_face":[0,1,2]})");
  auto a = cli({"validate", "-i", asym});
  CHECK(a.code == exit_code::malformed);
  CHECK(a.out.find("asymmetric") != std::string::npos);
  CHECK(cli({"validate", "-i", (dir / "missing.json").string()}).code == exit_code::malformed);
}

TEST_CASE("cli: usage errors") {
  CHECK(cli({}).code == exit_code::malformed);
  CHECK(cli({"frobnicate"}).code == exit_code::malformed);
  CHECK(cli({"color", "--generator", "hexagon", "--orientation", "up"}).code == exit_code::malformed);
  CHECK(cli({"color", "--generator", "nosuch"}).code == exit_code::malformed);
  CHECK(cli({"color", "--generator", "hexagon", "--start", "99"}).code == exit_code::malformed);
  CHECK(cli({"--help"}).code == exit_code::ok);
}

TEST_CASE("cli: color, verify and oracle") {
  auto dir = scratch_dir("color");
  auto tri = (dir / "triangle.json").string();
  write_text_file(tri, R"({"n":3,"rotation":[[1,2],[2,0],[0,1]],"outer_face":[0,1,2]})");
  auto res = cli({"color", "-i", tri});
  CHECK(res.code == exit_code::ok);
  auto doc = parse_json(res.out);
  CHECK(doc["status"] == "success");
  CHECK(doc["counts"] == Json::array({1, 1, 1}));

  auto outcome_path = (dir / "outcome.json").string();
  CHECK(cli({"color", "-i", tri, "--trace", "-o", outcome_path}).code == exit_code::ok);
  CHECK(read_json_file(outcome_path).contains("trace"));
  auto v = cli({"verify", "-i", tri, "--coloring", outcome_path});
  CHECK(v.code == exit_code::ok);
  CHECK(parse_json(v.out)["proper"] == true);

  auto wrong = (dir / "wrong.json").string();
  write_text_file(wrong, R"({"colors":[1,1,3]})");
  auto w = cli({"verify", "-i", tri, "--coloring", wrong});
  CHECK(w.code == exit_code::not_g6);
  CHECK(parse_json(w.out)["violations"] == Json::parse("[[0,1]]"));
  auto partial = (dir / "partial.json").string();
  write_text_file(partial, R"({"colors":[1,null,3]})");
  CHECK(cli({"verify", "-i", tri, "--coloring", partial}).code == exit_code::malformed);

  CHECK(cli({"oracle", "--generator", "hub"}).code == exit_code::ok);
  auto k4 = (dir / "k4.json").string();
  write_text_file(k4, R"({"n":4,"rotation":[[1,3,2],[2,3,0],[0,3,1],[0,1,2]],"outer_face":[0,1,2]})");
  auto o = cli({"oracle", "-i", k4});
  CHECK(o.code == exit_code::color_failure);
  CHECK(parse_json(o.out)["status"] == "not_colorable");
}

TEST_CASE("cli: color output is byte-identical across runs") {
  auto a = cli({"color", "--generator", "random", "--seed", "12345", "--n", "40", "--p", "0.3"});
  auto b = cli({"color", "--generator", "random", "--seed", "12345", "--n", "40", "--p", "0.3"});
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("cli: gen corpus") {
  auto dir = scratch_dir("gen");
  auto res = cli({"gen", "--n", "20", "--p", "0.4", "--seed", "10", "--count", "3", "--out", dir.string()});
  CHECK(res.code == exit_code::ok);
  auto manifest = read_json_file((dir / "manifest.json").string());
  CHECK(manifest["version"] == kGeneratorVersion);
  CHECK(manifest["seeds"] == Json::array({10, 11, 12}));
  REQUIRE(manifest["files"].size() == 3);
  for (const auto& f : manifest["files"]) {
    auto inst = instance_from_json(read_json_file((dir / f.get<std::string>()).string()));
    CHECK(is_g6(inst.graph));
  }
  auto bench_res = cli({"bench", "--corpus", dir.string(), "--repeats", "1"});
  CHECK(bench_res.out.find("exponent") != std::string::npos);
}

TEST_CASE("cli: hunt writes records and summary") {
  auto dir = scratch_dir("hunt");
  auto path = (dir / "hunt.ndjson").string();
  auto res = cli({"hunt", "--count", "30", "--n-max", "25", "--workers", "2", "-o", path});
  CHECK(res.code == exit_code::ok);
  auto summary = parse_json(res.out);
  CHECK(summary["instances_tested"] == 30);
  CHECK(summary["counterexample_candidates"] == 0);
  std::ifstream in(path);
  std::vector<Json> docs;
  for (std::string line; std::getline(in, line);) docs.push_back(parse_json(line));
  REQUIRE(docs.size() == 31);
  for (std::size_t i = 0; i < 30; ++i) CHECK(docs[i].contains("replay"));
  CHECK(docs.back()["summary"] == true);
}

TEST_CASE("cli: dot export") {
  auto dir = scratch_dir("dot");
  auto tri = (dir / "triangle.json").string();
  write_text_file(tri, R"({"n":3,"rotation":[[1,2],[2,0],[0,1]],"outer_face":[0,1,2]})");
  auto res = cli({"export-dot", "-i", tri});
  CHECK(res.code == exit_code::ok);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = res.out.find(needle); pos != std::string::npos; pos = res.out.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count(" -- ") == 3);
  CHECK(count("fillcolor=green") == 1);
  CHECK(count("fillcolor=yellow") == 1);
  CHECK(count("fillcolor=red") == 1);

  auto gadget = cli({"export-dot", "--generator", "hexagon"});
  res = gadget;
  CHECK(count("fillcolor=red") == 6);
  CHECK(count("chain=1") == 12);
  res = cli({"export-dot", "--generator", "hexagon", "--no-color"});
  CHECK(count("fillcolor") == 0);
  CHECK(count("chain=1") == 12);
}
