#include "spiralcolor/spiral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spiralcolor {

std::string_view to_string(Orientation o) {
  return o == Orientation::clockwise ? "cw" : "ccw";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "cw" || text == "clockwise") return Orientation::clockwise;
  if (text == "ccw" || text == "counterclockwise") return Orientation::counterclockwise;
  throw std::invalid_argument("orientation must be cw or ccw");
}

std::vector<int> SpiralDecomposition::chain_of(int vertex_count) const {
  std::vector<int> out(vertex_count, 0);
  for (const auto& chain : chains) {
    for (VertexId v : chain.vertices) {
      if (v >= 0 && v < vertex_count) out[v] = chain.index;
    }
  }
  return out;
}

namespace {

// Level-synchronous BFS that stops at the first level containing an
// unscanned vertex. Visit marks use a generation counter so repeated
// restarts cost only the explored region.
class RestartSearch {
 public:
  explicit RestartSearch(const PlanarGraph& g)
      : g_(g), stamp_(g.vertex_count(), 0), parent_(g.vertex_count(), -1) {}

  RestartTarget find(std::span<const char> scanned, VertexId last) {
    ++generation_;
    frontier_.assign(1, last);
    stamp_[last] = generation_;
    parent_[last] = -1;
    while (!frontier_.empty()) {
      next_.clear();
      VertexId best = -1;
      for (VertexId v : frontier_) {
        for (VertexId u : g_.rotation(v)) {
          if (stamp_[u] == generation_) continue;
          stamp_[u] = generation_;
          parent_[u] = v;
          next_.push_back(u);
          if (!scanned[u] && (best < 0 || u < best)) best = u;
        }
      }
      if (best >= 0) return {best, parent_[best]};
      frontier_.swap(next_);
    }
    // Unreachable from `last`; graphs are connected, so only a caller-built
    // scanned mask can get here.
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!scanned[v]) return {v, std::nullopt};
    }
    throw std::invalid_argument("all vertices already scanned");
  }

 private:
  const PlanarGraph& g_;
  std::vector<unsigned> stamp_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> frontier_, next_;
  unsigned generation_ = 0;
};

std::optional<VertexId> next_step(const PlanarGraph& g, VertexId v, std::optional<VertexId> from,
                                  Orientation orientation, const std::vector<char>& scanned) {
  auto rot = g.rotation(v);
  const int deg = static_cast<int>(rot.size());
  if (deg == 0) return std::nullopt;
  const bool cw = orientation == Orientation::clockwise;
  if (!from) {
    for (int k = 0; k < deg; ++k) {
      VertexId u = rot[cw ? k : (deg - k) % deg];
      if (!scanned[u]) return u;
    }
    return std::nullopt;
  }
  const int j = g.rotation_index(v, *from);
  for (int k = 1; k <= deg; ++k) {
    VertexId u = rot[cw ? (j + k) % deg : ((j - k) % deg + deg) % deg];
    if (!scanned[u]) return u;
  }
  return std::nullopt;
}

}  // namespace

RestartTarget chain_restart_target(const PlanarGraph& g, std::span<const char> scanned,
                                   VertexId last) {
  if (static_cast<int>(scanned.size()) != g.vertex_count()) {
    throw std::invalid_argument("scanned mask size does not match the graph");
  }
  if (std::all_of(scanned.begin(), scanned.end(), [](char c) { return c != 0; })) {
    throw std::invalid_argument("all vertices already scanned");
  }
  RestartSearch search(g);
  return search.find(scanned, last);
}

VertexId default_start(const PlanarGraph& g) {
  auto outer = g.outer_face();
  return *std::min_element(outer.begin(), outer.end());
}

SpiralDecomposition decompose(const PlanarGraph& g, VertexId start, Orientation orientation) {
  auto outer = g.outer_face();
  auto it = std::find(outer.begin(), outer.end(), start);
  if (start < 0 || start >= g.vertex_count() || it == outer.end()) {
    throw std::invalid_argument("start vertex " + std::to_string(start) + " is not on the outer face");
  }
  const std::size_t m = outer.size();
  const auto pos = static_cast<std::size_t>(it - outer.begin());

  // Arrive at start as if walking the outer face in the chosen direction.
  std::optional<VertexId> from;
  if (m > 1) {
    from = orientation == Orientation::clockwise ? outer[(pos + m - 1) % m] : outer[(pos + 1) % m];
  }

  const int n = g.vertex_count();
  SpiralDecomposition d;
  d.start = start;
  d.orientation = orientation;
  std::vector<char> scanned(n, 0);
  RestartSearch restart(g);
  VertexId current = start;
  int remaining = n;
  for (;;) {
    SpiralChain chain;
    chain.index = static_cast<int>(d.chains.size()) + 1;
    chain.vertices.push_back(current);
    scanned[current] = 1;
    --remaining;
    while (auto next = next_step(g, current, from, orientation, scanned)) {
      from = current;
      current = *next;
      chain.vertices.push_back(current);
      scanned[current] = 1;
      --remaining;
    }
    d.chains.push_back(std::move(chain));
    if (remaining == 0) break;
    RestartTarget target = restart.find(scanned, current);
    from = target.via;
    current = target.vertex;
  }
  return d;
}

std::vector<std::string> check_decomposition(const PlanarGraph& g, const SpiralDecomposition& d) {
  std::vector<std::string> problems;
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  for (std::size_t i = 0; i < d.chains.size(); ++i) {
    const auto& chain = d.chains[i];
    if (chain.index != static_cast<int>(i) + 1) {
      problems.push_back("chain " + std::to_string(i) + " has index " + std::to_string(chain.index));
    }
    if (chain.vertices.empty()) problems.push_back("chain " + std::to_string(chain.index) + " is empty");
    for (std::size_t k = 0; k < chain.vertices.size(); ++k) {
      VertexId v = chain.vertices[k];
      if (v < 0 || v >= n) {
        problems.push_back("vertex " + std::to_string(v) + " out of range");
        continue;
      }
      ++seen[v];
      if (k > 0) {
        VertexId prev = chain.vertices[k - 1];
        if (prev >= 0 && prev < n && !g.adjacent(prev, v)) {
          std::ostringstream os;
          os << "chain " << chain.index << " steps along non-edge " << prev << "-" << v;
          problems.push_back(os.str());
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (seen[v] == 0) problems.push_back("vertex " + std::to_string(v) + " is not covered");
    if (seen[v] > 1) problems.push_back("vertex " + std::to_string(v) + " appears " + std::to_string(seen[v]) + " times");
  }
  if (!d.chains.empty() && !d.chains.front().vertices.empty() && d.chains.front().vertices.front() != d.start) {
    problems.push_back("first chain does not begin at the start vertex");
  }
  return problems;
}

}  // namespace spiralcolor
