#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spiralcolor {

using VertexId = int;

/// Per-vertex cyclic neighbor order (clockwise in the embedding).
using Rotation = std::vector<std::vector<VertexId>>;

/// Sorted neighbor lists; the combinatorial view used by the cycle and
/// triangle routines, which do not need an embedding.
using Adjacency = std::vector<std::vector<VertexId>>;

/// A closed walk of vertices; consecutive entries (and last,first) are the
/// directed edges of one face.
using FaceWalk = std::vector<VertexId>;

enum class GraphErrorKind {
  invalid_vertex_count,
  invalid_vertex,
  self_loop,
  duplicate_neighbor,
  asymmetric_adjacency,
  disconnected,
  euler_violation,
  outer_face_not_a_face,
};

const char* to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Simple connected plane graph given by a rotation system and a designated
/// outer face. Immutable once built.
class PlanarGraph {
 public:
  /// Validates the rotation system and returns the graph. Checks run in the
  /// order: vertex ids, self-loops, duplicates, symmetry, connectivity,
  /// Euler's formula, outer face membership. Throws GraphError.
  static PlanarGraph build(int vertex_count, Rotation rotation,
                           std::vector<VertexId> outer_face);

  int vertex_count() const noexcept { return static_cast<int>(rotation_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

  const Rotation& rotation() const noexcept { return rotation_; }
  std::span<const VertexId> rotation(VertexId v) const { return rotation_[v]; }
  const Adjacency& adjacency() const noexcept { return adjacency_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::span<const VertexId> outer_face() const noexcept { return outer_face_; }
  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }

  bool adjacent(VertexId u, VertexId v) const;

  /// Position of `u` in the rotation of `v`, or -1 when they are not adjacent.
  int rotation_index(VertexId v, VertexId u) const;

  bool on_outer_face(VertexId v) const;

  /// FNV-1a over the rotation system and outer face.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

 private:
  PlanarGraph() = default;

  Rotation rotation_;
  Adjacency adjacency_;
  // (neighbor, rotation position) sorted by neighbor, per vertex.
  std::vector<std::vector<std::pair<VertexId, int>>> position_;
  std::vector<VertexId> outer_face_;
  std::vector<FaceWalk> faces_;
  std::vector<char> on_outer_;
  std::size_t edge_count_ = 0;
  std::uint64_t fingerprint_ = 0;
};

/// Traces the face containing the directed edge (u, v): after arriving at w
/// from x, leave along the neighbor following x in w's rotation. The rotation
/// must be symmetric and contain the edge.
FaceWalk trace_face_from(const Rotation& rotation, VertexId u, VertexId v);

/// All faces, one walk per orbit of directed edges. Walks are discovered in
/// order of (tail vertex, rotation position) and start at that directed edge.
std::vector<FaceWalk> trace_faces(const PlanarGraph& g);

/// Builds sorted neighbor lists from a rotation system (no validation).
Adjacency adjacency_from_rotation(const Rotation& rotation);

/// True when `walk` equals `face` up to a cyclic shift.
bool same_cyclic_walk(std::span<const VertexId> walk, std::span<const VertexId> face);

struct Triangle {
  VertexId a, b, c;  // a < b < c

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

Triangle make_triangle(VertexId x, VertexId y, VertexId z);

struct CycleReport {
  /// Each entry is one cycle in canonical form (smallest vertex first, then
  /// the smaller of its two neighbors on the cycle).
  std::vector<std::vector<VertexId>> cycles;

  bool empty() const noexcept { return cycles.empty(); }
};

/// Inclusive range of forbidden cycle lengths. The default is the working
/// class (no 4- or 5-cycles); strict mode also forbids 6-cycles.
struct ForbiddenCycles {
  int min_length = 4;
  int max_length = 5;

  static constexpr ForbiddenCycles standard() { return {4, 5}; }
  static constexpr ForbiddenCycles strict() { return {4, 6}; }
};

/// Every cycle with length in the forbidden range, one representative per
/// vertex set (the lexicographically smallest canonical sequence).
CycleReport find_short_cycles(const Adjacency& adj,
                              ForbiddenCycles lengths = ForbiddenCycles::standard());
CycleReport find_short_cycles(const PlanarGraph& g,
                              ForbiddenCycles lengths = ForbiddenCycles::standard());

/// True when some simple path from `from` to `to` has length in
/// [min_edges, max_edges]. Paths may not use the direct edge from--to.
bool has_path_with_length(const Adjacency& adj, VertexId from, VertexId to,
                          int min_edges, int max_edges);

std::vector<Triangle> triangles_of(const Adjacency& adj);
std::vector<Triangle> triangles_of(const PlanarGraph& g);

/// Triangles through edge (u, v), ordered by the third vertex.
std::vector<VertexId> triangle_apexes(const Adjacency& adj, VertexId u, VertexId v);

/// Pairs of distinct triangles sharing exactly one edge.
std::vector<std::pair<Triangle, Triangle>> adjacent_triangle_pairs(const Adjacency& adj);
std::vector<std::pair<Triangle, Triangle>> adjacent_triangle_pairs(const PlanarGraph& g);

/// Membership in the working class: valid plane graph with no forbidden cycles.
bool is_g6(const PlanarGraph& g, ForbiddenCycles lengths = ForbiddenCycles::standard());

}  // namespace spiralcolor
