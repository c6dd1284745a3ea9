#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "spiralcolor/graph.hpp"
#include "spiralcolor/json_io.hpp"

namespace spiralcolor {

inline constexpr int kGeneratorVersion = 1;

using InstanceSeed = std::variant<std::uint64_t, std::string>;

struct Instance {
  PlanarGraph graph;
  InstanceSeed seed;  // numeric seed, or "gadget:<name>"
  Json provenance;    // {"generator": ..., "version": ..., parameters...}
};

/// Hexagon h_0..h_5 with an apex a_i on edge h_i h_{i+1} for i < triangles,
/// apexes drawn in the outer face. Apexes are labeled 0..triangles-1 and
/// h_i is labeled triangles + i, so the default start is apex a_0.
Instance gadget_hexagon_triangles(int triangles = 6);

/// Labels of the three-triangle hub gadget.
struct HubGadgetLabels {
  static constexpr VertexId x(int i) { return 3 * i; }
  static constexpr VertexId y(int i) { return 3 * i + 1; }
  static constexpr VertexId z(int i) { return 3 * i + 2; }
  static constexpr VertexId hub = 9;
};

/// Three disjoint triangles (x_i, y_i, z_i), i = 0..2, and a hub adjacent
/// to every z_i.
Instance gadget_three_triangles_hub();

/// Plane graph grown inside faces of the current embedding: each step
/// either attaches a triangle to a face edge (with probability
/// `attach_probability`) or joins two corners of one face by a new path of
/// length at least 3. A step is kept only if it closes no cycle with length
/// in `forbidden`; if no step is found the graph grows by a pendant vertex.
/// Deterministic for a fixed seed. Throws std::invalid_argument for n < 3.
Instance gen_random_g6(int n, double attach_probability, std::uint64_t seed,
                       ForbiddenCycles forbidden = ForbiddenCycles::standard());

/// Graph JSON followed by "seed" and "provenance".
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& doc);

std::string seed_label(const InstanceSeed& seed);

}  // namespace spiralcolor
