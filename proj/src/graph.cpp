#include "spiralcolor/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace spiralcolor {

namespace {

std::string vertex_message(const char* what, VertexId v) {
  std::ostringstream os;
  os << what << " at vertex " << v;
  return os.str();
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ull;
  }
  return h;
}

int next_in_rotation(const std::vector<VertexId>& rot, VertexId from) {
  auto it = std::find(rot.begin(), rot.end(), from);
  auto idx = static_cast<std::size_t>(it - rot.begin());
  return rot[(idx + 1) % rot.size()];
}

}  // namespace

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::invalid_vertex_count: return "invalid vertex count";
    case GraphErrorKind::invalid_vertex: return "invalid vertex";
    case GraphErrorKind::self_loop: return "self-loop";
    case GraphErrorKind::duplicate_neighbor: return "duplicate neighbor";
    case GraphErrorKind::asymmetric_adjacency: return "asymmetric adjacency";
    case GraphErrorKind::disconnected: return "disconnected graph";
    case GraphErrorKind::euler_violation: return "Euler check failed";
    case GraphErrorKind::outer_face_not_a_face: return "outer face is not a traced face";
  }
  return "unknown";
}

FaceWalk trace_face_from(const Rotation& rotation, VertexId u, VertexId v) {
  FaceWalk walk;
  VertexId tail = u;
  VertexId head = v;
  do {
    walk.push_back(tail);
    VertexId next = next_in_rotation(rotation[head], tail);
    tail = head;
    head = next;
  } while (tail != u || head != v);
  return walk;
}

Adjacency adjacency_from_rotation(const Rotation& rotation) {
  Adjacency adj(rotation.begin(), rotation.end());
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool same_cyclic_walk(std::span<const VertexId> walk, std::span<const VertexId> face) {
  if (walk.size() != face.size()) return false;
  if (walk.empty()) return true;
  const std::size_t n = walk.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (face[shift] != walk[0]) continue;
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = face[(shift + i) % n] == walk[i];
    if (match) return true;
  }
  return false;
}

PlanarGraph PlanarGraph::build(int vertex_count, Rotation rotation,
                               std::vector<VertexId> outer_face) {
  if (vertex_count < 1 || static_cast<std::size_t>(vertex_count) != rotation.size()) {
    throw GraphError(GraphErrorKind::invalid_vertex_count,
                     "vertex count must be positive and match the rotation list count");
  }
  const int n = vertex_count;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : rotation[v]) {
      if (u < 0 || u >= n) throw GraphError(GraphErrorKind::invalid_vertex, vertex_message("neighbor id out of range", v));
    }
  }
  for (VertexId v : outer_face) {
    if (v < 0 || v >= n) throw GraphError(GraphErrorKind::invalid_vertex, vertex_message("outer face id out of range", v));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (std::find(rotation[v].begin(), rotation[v].end(), v) != rotation[v].end()) {
      throw GraphError(GraphErrorKind::self_loop, vertex_message("self-loop", v));
    }
  }

  PlanarGraph g;
  g.adjacency_ = adjacency_from_rotation(rotation);
  for (VertexId v = 0; v < n; ++v) {
    const auto& row = g.adjacency_[v];
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw GraphError(GraphErrorKind::duplicate_neighbor, vertex_message("repeated neighbor", v));
    }
  }
  std::size_t directed = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.adjacency_[v]) {
      if (!std::binary_search(g.adjacency_[u].begin(), g.adjacency_[u].end(), v)) {
        std::ostringstream os;
        os << "vertex " << u << " is in the rotation of " << v << " but not vice versa";
        throw GraphError(GraphErrorKind::asymmetric_adjacency, os.str());
      }
    }
    directed += g.adjacency_[v].size();
  }
  g.edge_count_ = directed / 2;

  {
    std::vector<char> seen(n, 0);
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (VertexId u : g.adjacency_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          queue.push(u);
        }
      }
    }
    if (reached != n) throw GraphError(GraphErrorKind::disconnected, "graph is not connected");
  }

  g.rotation_ = std::move(rotation);
  g.position_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    auto& pos = g.position_[v];
    pos.reserve(g.rotation_[v].size());
    for (int i = 0; i < static_cast<int>(g.rotation_[v].size()); ++i) pos.emplace_back(g.rotation_[v][i], i);
    std::sort(pos.begin(), pos.end());
  }

  // Face tracing over directed edges; an isolated single vertex is one face.
  if (g.edge_count_ == 0) {
    g.faces_.push_back({0});
  } else {
    std::vector<std::vector<char>> used(n);
    for (VertexId v = 0; v < n; ++v) used[v].assign(g.rotation_[v].size(), 0);
    for (VertexId v = 0; v < n; ++v) {
      for (int i = 0; i < static_cast<int>(g.rotation_[v].size()); ++i) {
        if (used[v][i]) continue;
        FaceWalk walk;
        VertexId tail = v;
        int idx = i;
        while (!used[tail][idx]) {
          used[tail][idx] = 1;
          walk.push_back(tail);
          VertexId head = g.rotation_[tail][idx];
          int back = g.rotation_index(head, tail);
          idx = (back + 1) % static_cast<int>(g.rotation_[head].size());
          tail = head;
        }
        g.faces_.push_back(std::move(walk));
      }
    }
  }

  const long long euler = static_cast<long long>(n) - static_cast<long long>(g.edge_count_) +
                          static_cast<long long>(g.faces_.size());
  if (euler != 2) {
    std::ostringstream os;
    os << "V - E + F = " << n << " - " << g.edge_count_ << " + " << g.faces_.size() << " = " << euler
       << ", expected 2";
    throw GraphError(GraphErrorKind::euler_violation, os.str());
  }

  bool found = false;
  for (const auto& face : g.faces_) {
    if (same_cyclic_walk(outer_face, face)) {
      found = true;
      break;
    }
  }
  if (!found) throw GraphError(GraphErrorKind::outer_face_not_a_face, "outer face does not match any traced face");

  g.outer_face_ = std::move(outer_face);
  g.on_outer_.assign(n, 0);
  for (VertexId v : g.outer_face_) g.on_outer_[v] = 1;

  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, static_cast<std::uint64_t>(n));
  for (const auto& row : g.rotation_) {
    h = fnv1a(h, row.size());
    for (VertexId u : row) h = fnv1a(h, static_cast<std::uint64_t>(u));
  }
  for (VertexId v : g.outer_face_) h = fnv1a(h, static_cast<std::uint64_t>(v));
  g.fingerprint_ = h;
  return g;
}

bool PlanarGraph::adjacent(VertexId u, VertexId v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

int PlanarGraph::rotation_index(VertexId v, VertexId u) const {
  const auto& pos = position_[v];
  auto it = std::lower_bound(pos.begin(), pos.end(), std::pair<VertexId, int>{u, -1});
  if (it == pos.end() || it->first != u) return -1;
  return it->second;
}

bool PlanarGraph::on_outer_face(VertexId v) const { return on_outer_[v] != 0; }

std::vector<FaceWalk> trace_faces(const PlanarGraph& g) { return g.faces(); }

Triangle make_triangle(VertexId x, VertexId y, VertexId z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z};
}

namespace {

std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle) {
  const std::size_t n = cycle.size();
  std::size_t start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const VertexId forward = cycle[(start + 1) % n];
  const VertexId backward = cycle[(start + n - 1) % n];
  std::vector<VertexId> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(forward <= backward ? cycle[(start + i) % n] : cycle[(start + n - i) % n]);
  }
  return out;
}

struct CycleSearch {
  const Adjacency& adj;
  ForbiddenCycles lengths;
  VertexId root = 0;
  std::vector<VertexId> path;
  std::vector<char> on_path;
  std::map<std::vector<VertexId>, std::vector<VertexId>> by_vertex_set;

  void extend(VertexId v) {
    const int len = static_cast<int>(path.size());
    if (len >= lengths.min_length && path[1] < path.back() &&
        std::binary_search(adj[v].begin(), adj[v].end(), root)) {
      record();
    }
    if (len == lengths.max_length) return;
    for (VertexId u : adj[v]) {
      if (u <= root || on_path[u]) continue;
      path.push_back(u);
      on_path[u] = 1;
      extend(u);
      on_path[u] = 0;
      path.pop_back();
    }
  }

  void record() {
    std::vector<VertexId> key = path;
    std::sort(key.begin(), key.end());
    auto cycle = canonical_cycle(path);
    auto [it, inserted] = by_vertex_set.try_emplace(std::move(key), cycle);
    if (!inserted && cycle < it->second) it->second = std::move(cycle);
  }
};

}  // namespace

CycleReport find_short_cycles(const Adjacency& adj, ForbiddenCycles lengths) {
  CycleSearch search{adj, lengths, 0, {}, {}, {}};
  search.on_path.assign(adj.size(), 0);
  for (VertexId s = 0; s < static_cast<VertexId>(adj.size()); ++s) {
    search.root = s;
    search.path = {s};
    search.on_path[s] = 1;
    search.extend(s);
    search.on_path[s] = 0;
  }
  CycleReport report;
  for (auto& [key, cycle] : search.by_vertex_set) report.cycles.push_back(std::move(cycle));
  std::sort(report.cycles.begin(), report.cycles.end());
  return report;
}

CycleReport find_short_cycles(const PlanarGraph& g, ForbiddenCycles lengths) {
  return find_short_cycles(g.adjacency(), lengths);
}

namespace {

bool path_search(const Adjacency& adj, VertexId v, VertexId target, int depth, int min_edges,
                 int max_edges, std::vector<char>& on_path) {
  for (VertexId u : adj[v]) {
    if (u == target) {
      if (depth + 1 >= min_edges && depth + 1 <= max_edges) return true;
      continue;
    }
    if (on_path[u] || depth + 1 >= max_edges) continue;
    on_path[u] = 1;
    bool hit = path_search(adj, u, target, depth + 1, min_edges, max_edges, on_path);
    on_path[u] = 0;
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool has_path_with_length(const Adjacency& adj, VertexId from, VertexId to, int min_edges,
                          int max_edges) {
  if (from == to || max_edges < 1 || max_edges < min_edges) return false;
  std::vector<char> on_path(adj.size(), 0);
  on_path[from] = 1;
  // Skip the direct edge: start the search from neighbors other than `to`.
  for (VertexId u : adj[from]) {
    if (u == to) continue;
    if (max_edges < 2) continue;
    on_path[u] = 1;
    bool hit = path_search(adj, u, to, 1, min_edges, max_edges, on_path);
    on_path[u] = 0;
    if (hit) return true;
  }
  return false;
}

std::vector<VertexId> triangle_apexes(const Adjacency& adj, VertexId u, VertexId v) {
  std::vector<VertexId> common;
  std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                        std::back_inserter(common));
  return common;
}

std::vector<Triangle> triangles_of(const Adjacency& adj) {
  std::vector<Triangle> out;
  for (VertexId u = 0; u < static_cast<VertexId>(adj.size()); ++u) {
    for (VertexId v : adj[u]) {
      if (v <= u) continue;
      for (VertexId w : triangle_apexes(adj, u, v)) {
        if (w > v) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

std::vector<Triangle> triangles_of(const PlanarGraph& g) { return triangles_of(g.adjacency()); }

std::vector<std::pair<Triangle, Triangle>> adjacent_triangle_pairs(const Adjacency& adj) {
  std::vector<std::pair<Triangle, Triangle>> out;
  for (VertexId u = 0; u < static_cast<VertexId>(adj.size()); ++u) {
    for (VertexId v : adj[u]) {
      if (v <= u) continue;
      auto apexes = triangle_apexes(adj, u, v);
      for (std::size_t i = 0; i < apexes.size(); ++i) {
        for (std::size_t j = i + 1; j < apexes.size(); ++j) {
          out.emplace_back(make_triangle(u, v, apexes[i]), make_triangle(u, v, apexes[j]));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Triangle, Triangle>> adjacent_triangle_pairs(const PlanarGraph& g) {
  return adjacent_triangle_pairs(g.adjacency());
}

bool is_g6(const PlanarGraph& g, ForbiddenCycles lengths) {
  return find_short_cycles(g, lengths).empty();
}

}  // namespace spiralcolor
