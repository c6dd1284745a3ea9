#pragma once

#include <optional>
#include <string>

#include "spiralcolor/coloring.hpp"
#include "spiralcolor/json_io.hpp"
#include "spiralcolor/oracle.hpp"
#include "spiralcolor/spiral.hpp"

namespace spiralcolor {

/// {"start": int, "orientation": "cw"|"ccw", "chains": [[int...]...]}
Json decomposition_to_json(const SpiralDecomposition& d);
SpiralDecomposition decomposition_from_json(const Json& doc);

/// {"status", "colors", "counts", "certificate"[, "trace"]}; colors and
/// certificate are null when not applicable.
Json outcome_to_json(const ColoringOutcome& outcome, bool include_trace = false);

Json certificate_to_json(const FailureCertificate& cert);

/// {"status", "colors", "counts", "nodes_explored"}
Json verdict_to_json(const OracleVerdict& verdict);

/// Reads the "colors" array of an outcome or verdict document (or a bare
/// array). Entries are ranks 1..3; 0 or null marks an uncolored vertex.
Coloring coloring_from_json(const Json& doc);

/// Graphviz rendering with each vertex's chain index and, when given, its
/// color (green / yellow / red) as attributes.
std::string to_dot(const PlanarGraph& g, const SpiralDecomposition& d,
                   const std::optional<ColoringOutcome>& outcome);

}  // namespace spiralcolor
