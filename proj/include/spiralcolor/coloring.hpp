#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "spiralcolor/graph.hpp"
#include "spiralcolor/spiral.hpp"

namespace spiralcolor {

/// Ranked colors; a smaller rank has priority.
enum class Color : std::uint8_t { green = 1, yellow = 2, red = 3 };

inline constexpr std::array<Color, 3> kColors{Color::green, Color::yellow, Color::red};

constexpr int rank(Color c) { return static_cast<int>(c); }
Color color_from_rank(int r);
std::string_view color_name(Color c);

using Coloring = std::vector<std::optional<Color>>;

enum class TraceRule {
  greedy,           // normal turn: smallest rank absent from colored neighbors
  skip_precolored,  // normal turn of a vertex already colored by a triangle rule
  triangle_apex,    // third vertex of a {green, yellow} chain edge set to red
  reassign,         // chain edge recolored because the apex was already colored
  reassign_kept,    // recoloring attempt had no proper completion; colors kept
  blocked,          // vertex sees all three colors
};

std::string_view to_string(TraceRule rule);

struct TraceEvent {
  VertexId vertex = 0;
  TraceRule rule = TraceRule::greedy;
  std::optional<Color> color;  // color held after the event
  std::size_t step = 0;        // position in the processing order
};

struct FailureCertificate {
  VertexId blocked = 0;
  /// Colored neighbors of the blocked vertex when it was blocked.
  std::vector<std::pair<VertexId, Color>> neighbor_colors;
  std::size_t trace_position = 0;  // index of the `blocked` event in the trace
  std::size_t step = 0;
  TraceRule during = TraceRule::greedy;  // rule that hit the impasse
};

using ColorCounts = std::array<int, 3>;

struct ColoringOutcome {
  enum class Status { success, failure };

  Status status = Status::success;
  Coloring colors;  // total on success; partial state at the impasse otherwise
  ColorCounts counts{0, 0, 0};
  std::optional<FailureCertificate> certificate;
  std::vector<TraceEvent> trace;
  std::uint64_t graph_fingerprint = 0;

  bool ok() const noexcept { return status == Status::success; }
};

/// Colors chains S_k..S_1, each in reverse chain order, with the smallest
/// available rank, applying the triangle rules on chain edges as both
/// endpoints become colored. Throws std::invalid_argument when `d` does not
/// cover exactly the vertices of `g`.
ColoringOutcome color(const PlanarGraph& g, const SpiralDecomposition& d);

/// Mutable state of one coloring run, exposed so the triangle rules can be
/// exercised on hand-built configurations.
class ColoringState {
 public:
  explicit ColoringState(const Adjacency& adj);

  const Adjacency& adjacency() const noexcept { return *adj_; }
  const Coloring& colors() const noexcept { return colors_; }
  std::optional<Color> at(VertexId v) const { return colors_[v]; }
  const std::vector<TraceEvent>& trace() const noexcept { return trace_; }
  const std::optional<FailureCertificate>& failure() const noexcept { return failure_; }
  bool failed() const noexcept { return failure_.has_value(); }

  void set_step(std::size_t step) noexcept { step_ = step; }

  /// Smallest rank not held by a colored neighbor of v, ignoring `ignore`.
  std::optional<Color> smallest_available(VertexId v, std::optional<VertexId> ignore = std::nullopt) const;

  /// Normal turn of v. Returns false (and records a failure) when blocked.
  bool greedy(VertexId v);

  /// Records the normal turn of an already-colored vertex.
  void skip(VertexId v);

  void assign(VertexId v, Color c, TraceRule rule);

  /// Triangle rules for the chain edge (vj, vj_next), where vj_next comes
  /// right after vj in the chain and is colored first. Both endpoints must
  /// be colored. For each triangle {vj, vj_next, apex}, in apex order:
  ///   - apex uncolored, edge colored {green, yellow}: apex becomes red;
  ///   - apex colored but not red: vj, then vj_next, are recolored with the
  ///     smallest available ranks; if no proper completion exists the
  ///     previous colors are kept;
  ///   - otherwise nothing happens.
  /// Returns false when the apex cannot take red (recorded as a failure).
  bool apply_triangle_rule(VertexId vj, VertexId vj_next);

 private:
  void block(VertexId v, TraceRule during);

  const Adjacency* adj_;
  Coloring colors_;
  std::vector<TraceEvent> trace_;
  std::optional<FailureCertificate> failure_;
  std::size_t step_ = 0;
};

struct ViolatedEdge {
  VertexId u, v;  // u < v

  friend bool operator==(const ViolatedEdge&, const ViolatedEdge&) = default;
};

/// Monochromatic edges of a total coloring. Throws std::invalid_argument on
/// a partial coloring.
std::vector<ViolatedEdge> verify(const Adjacency& adj, const Coloring& c);
std::vector<ViolatedEdge> verify(const PlanarGraph& g, const Coloring& c);

/// Per-color usage. Throws std::invalid_argument on a failure outcome.
ColorCounts color_stats(const ColoringOutcome& outcome);

ColorCounts count_colors(const Coloring& c);

}  // namespace spiralcolor
