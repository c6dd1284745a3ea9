#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "spiralcolor/coloring.hpp"
#include "spiralcolor/graph.hpp"

namespace spiralcolor {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct OracleVerdict {
  enum class Kind { colorable, not_colorable, budget_exhausted };

  Kind kind = Kind::budget_exhausted;
  Coloring witness;  // set when colorable
  std::uint64_t nodes_explored = 0;
  std::uint64_t graph_fingerprint = 0;

  static OracleVerdict colorable(Coloring witness, std::uint64_t fingerprint);
};

std::string_view to_string(OracleVerdict::Kind kind);

/// Exact 3-colorability by backtracking: most-constrained vertex first
/// (ties by degree, then id), ranks ascending, forward checking on the
/// remaining domains, and a new color only ever as the smallest unused one.
/// One node is one tentative assignment.
OracleVerdict exact_3color(const Adjacency& adj, std::uint64_t node_budget = kDefaultNodeBudget);
OracleVerdict exact_3color(const PlanarGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

enum class CrossCheck {
  consistent_success,
  heuristic_incomplete,
  counterexample_candidate,
  inconclusive,
};

std::string_view to_string(CrossCheck c);

/// Thrown when the two results do not describe the same graph, or when a
/// non-colorable verdict concerns a graph outside the working class.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CrossCheck cross_check(const PlanarGraph& g, const ColoringOutcome& heuristic,
                       const OracleVerdict& verdict,
                       ForbiddenCycles lengths = ForbiddenCycles::standard());

}  // namespace spiralcolor
