#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spiralcolor/graph.hpp"

namespace spiralcolor {

enum class Orientation { clockwise, counterclockwise };

std::string_view to_string(Orientation o);  // "cw" / "ccw"
Orientation parse_orientation(std::string_view text);

struct SpiralChain {
  int index = 0;  // 1-based, 1 is outermost
  std::vector<VertexId> vertices;
};

struct SpiralDecomposition {
  std::vector<SpiralChain> chains;
  VertexId start = 0;
  Orientation orientation = Orientation::clockwise;

  /// chain_of()[v] is the 1-based index of the chain holding v.
  std::vector<int> chain_of(int vertex_count) const;
};

/// Target of a chain restart together with the already-scanned vertex it is
/// reached from (the last edge of the shortest path), if any.
struct RestartTarget {
  VertexId vertex = 0;
  std::optional<VertexId> via;
};

/// Unscanned vertex at minimum BFS distance from `last`, smallest id on
/// ties. Throws std::invalid_argument when every vertex is scanned.
RestartTarget chain_restart_target(const PlanarGraph& g, std::span<const char> scanned,
                                   VertexId last);

/// Spiral-chain decomposition. Walking from `start` (which must lie on the
/// outer face): from v reached along (u, v), continue to the first unscanned
/// neighbor after u in v's rotation (reversed for counterclockwise). A chain
/// ends when no such neighbor exists; the next chain starts at the closest
/// unscanned vertex. Throws std::invalid_argument if `start` is not on the
/// outer face.
SpiralDecomposition decompose(const PlanarGraph& g, VertexId start,
                              Orientation orientation = Orientation::clockwise);

/// Smallest vertex id on the outer face.
VertexId default_start(const PlanarGraph& g);

/// Empty when `d` is a disjoint cover of V(g) by chains of adjacent vertices
/// with consecutive indices; otherwise one message per violated invariant.
std::vector<std::string> check_decomposition(const PlanarGraph& g, const SpiralDecomposition& d);

}  // namespace spiralcolor
