#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "spiralcolor/generators.hpp"
#include "spiralcolor/spiral.hpp"
#include "test_support.hpp"

using namespace spiralcolor;
using namespace spiralcolor::testing;

namespace {

// Tree 0-1-2 and 0-3-4-5.
Rotation two_branch_tree() { return {{1, 3}, {0, 2}, {1}, {0, 4}, {3, 5}, {4}}; }

std::vector<char> mask_of(int n, std::initializer_list<int> vs) {
  std::vector<char> m(n, 0);
  for (int v : vs) m[v] = 1;
  return m;
}

// Re-derives every step of `d` that does not depend on a hidden arrival
// edge: in-chain successors after the first step, chain ends, and restart
// targets. Returns the number of steps that disagree.
int spiral_rule_violations(const PlanarGraph& g, const SpiralDecomposition& d) {
  const int n = g.vertex_count();
  auto dist = all_pairs_distances(g.adjacency());
  std::vector<char> scanned(n, 0);
  int bad = 0;
  const bool cw = d.orientation == Orientation::clockwise;
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const auto& chain = d.chains[c].vertices;
    if (c > 0) {
      int last = d.chains[c - 1].vertices.back();
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (scanned[v]) continue;
        if (best < 0 || dist[last][v] < dist[last][best]) best = v;
      }
      if (chain.front() != best) ++bad;
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const int v = chain[i];
      scanned[v] = 1;
      if (i == 0) continue;
      if (i + 1 >= chain.size()) break;
      const int u = chain[i - 1];
      auto rot = g.rotation(v);
      const int deg = static_cast<int>(rot.size());
      const int at = g.rotation_index(v, u);
      int expected = -1;
      for (int k = 1; k <= deg; ++k) {
        int w = rot[((cw ? at + k : at - k) % deg + deg) % deg];
        if (!scanned[w]) {
          expected = w;
          break;
        }
      }
      if (chain[i + 1] != expected) ++bad;
    }
    for (int w : g.neighbors(chain.back())) {
      if (!scanned[w]) ++bad;
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("triangle is one chain") {
  auto g = make_graph(triangle_rotation());
  auto d = decompose(g, 0);
  REQUIRE(d.chains.size() == 1);
  CHECK(d.chains[0].index == 1);
  CHECK(d.chains[0].vertices.size() == 3);
  CHECK(d.chains[0].vertices.front() == 0);
  CHECK(check_decomposition(g, d).empty());
}

TEST_CASE("cycle gives a single spanning chain from any start") {
  auto g = make_graph(cycle_rotation(6));
  for (int s = 0; s < 6; ++s) {
    for (auto o : {Orientation::clockwise, Orientation::counterclockwise}) {
      auto d = decompose(g, s, o);
      REQUIRE(d.chains.size() == 1);
      CHECK(d.chains[0].vertices.size() == 6);
      CHECK(d.chains[0].vertices.front() == s);
      CHECK(check_decomposition(g, d).empty());
    }
  }
}

TEST_CASE("hexagon gadget snapshot") {
  auto g = gadget_hexagon_triangles(6).graph;
  auto cw = decompose(g, default_start(g), Orientation::clockwise);
  REQUIRE(cw.chains.size() == 1);
  CHECK(cw.chains[0].vertices == std::vector<int>{0, 7, 1, 8, 2, 9, 3, 10, 4, 11, 5, 6});
  auto ccw = decompose(g, default_start(g), Orientation::counterclockwise);
  CHECK(check_decomposition(g, ccw).empty());
  CHECK(spiral_rule_violations(g, ccw) == 0);
}

TEST_CASE("start must lie on the outer face") {
  auto g = make_graph(k4_rotation());
  REQUIRE_FALSE(g.on_outer_face(3));
  CHECK_THROWS_AS(decompose(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(decompose(g, 9), std::invalid_argument);
  CHECK(default_start(g) == 0);
}

TEST_CASE("restart target examples") {
  auto tree = make_graph(two_branch_tree());
  SUBCASE("adjacent unscanned vertex") {
    auto t = chain_restart_target(tree, mask_of(6, {0}), 0);
    CHECK(t.vertex == 1);
    CHECK(t.via == 0);
  }
  SUBCASE("distance 2 beats distance 3") {
    auto t = chain_restart_target(tree, mask_of(6, {0, 1, 3, 4}), 0);
    CHECK(t.vertex == 2);
    CHECK(t.via == 1);
  }
  SUBCASE("distance wins over a smaller id") {
    std::vector<int> swap25{0, 1, 5, 3, 4, 2};
    auto g = make_graph(relabel(two_branch_tree(), swap25));
    auto t = chain_restart_target(g, mask_of(6, {0, 1, 3, 4}), 0);
    CHECK(t.vertex == 5);
  }
  SUBCASE("ties go to the smaller id") {
    auto t = chain_restart_target(tree, mask_of(6, {0, 1, 3}), 0);
    CHECK(t.vertex == 2);
  }
  SUBCASE("nothing left") {
    CHECK_THROWS_AS(chain_restart_target(tree, mask_of(6, {0, 1, 2, 3, 4, 5}), 0), std::invalid_argument);
  }
}

TEST_CASE("restart target matches all-pairs distances under relabeling") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto base = gen_random_g6(8 + static_cast<int>(seed % 15), 0.1 * (seed % 11), seed).graph;
    const int n = base.vertex_count();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto rot = relabel(base.rotation(), perm);
      FaceWalk outer;
      for (int v : base.outer_face()) outer.push_back(perm[v]);
      auto g = PlanarGraph::build(n, rot, outer);
      auto dist = all_pairs_distances(g.adjacency());

      std::vector<char> scanned(n, 0);
      for (int v = 0; v < n; ++v) scanned[v] = rng() % 2;
      const int last = static_cast<int>(rng() % n);
      scanned[last] = 1;
      if (std::all_of(scanned.begin(), scanned.end(), [](char c) { return c; })) continue;

      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (!scanned[v] && (best < 0 || dist[last][v] < dist[last][best])) best = v;
      }
      auto t = chain_restart_target(g, scanned, last);
      CHECK(t.vertex == best);
      REQUIRE(t.via.has_value());
      CHECK(scanned[*t.via]);
      CHECK(g.adjacent(*t.via, t.vertex));
      CHECK(dist[last][*t.via] == dist[last][best] - 1);
    }
  }
}

TEST_CASE("decomposition invariants on generated instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = gen_random_g6(5 + static_cast<int>(seed % 50), 0.1 * (seed % 11), seed).graph;
    for (auto o : {Orientation::clockwise, Orientation::counterclockwise}) {
      for (int start : {default_start(g), static_cast<int>(g.outer_face().back())}) {
        auto d = decompose(g, start, o);
        CHECK(check_decomposition(g, d).empty());
        CHECK(spiral_rule_violations(g, d) == 0);
        CHECK(d.chains.front().vertices.front() == start);
        std::vector<int> all;
        for (std::size_t i = 0; i < d.chains.size(); ++i) {
          CHECK(d.chains[i].index == static_cast<int>(i) + 1);
          all.insert(all.end(), d.chains[i].vertices.begin(), d.chains[i].vertices.end());
        }
        std::sort(all.begin(), all.end());
        std::vector<int> ids(g.vertex_count());
        std::iota(ids.begin(), ids.end(), 0);
        CHECK(all == ids);
        auto again = decompose(g, start, o);
        REQUIRE(again.chains.size() == d.chains.size());
        for (std::size_t i = 0; i < d.chains.size(); ++i) CHECK(again.chains[i].vertices == d.chains[i].vertices);
      }
    }
  }
}

TEST_CASE("check_decomposition reports broken covers") {
  auto g = make_graph(cycle_rotation(6));
  auto d = decompose(g, 0);
  auto missing = d;
  missing.chains[0].vertices.pop_back();
  CHECK_FALSE(check_decomposition(g, missing).empty());
  auto jump = d;
  std::swap(jump.chains[0].vertices[1], jump.chains[0].vertices[3]);
  CHECK_FALSE(check_decomposition(g, jump).empty());
  auto chain_of = d.chain_of(6);
  CHECK(std::all_of(chain_of.begin(), chain_of.end(), [](int c) { return c == 1; }));
}

TEST_CASE("orientation names") {
  CHECK(to_string(Orientation::clockwise) == "cw");
  CHECK(parse_orientation("ccw") == Orientation::counterclockwise);
  CHECK_THROWS(parse_orientation("sideways"));
}
