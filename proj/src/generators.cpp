#include "spiralcolor/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace spiralcolor {

Instance gadget_hexagon_triangles(int triangles) {
  if (triangles < 0 || triangles > 6) throw std::invalid_argument("hexagon gadget takes 0..6 triangles");
  const int t = triangles;
  auto hex = [t](int i) { return t + ((i % 6) + 6) % 6; };
  auto has_apex = [t](int i) { return ((i % 6) + 6) % 6 < t; };
  auto apex = [](int i) { return ((i % 6) + 6) % 6; };

  Rotation rot(t + 6);
  for (int i = 0; i < t; ++i) rot[apex(i)] = {hex(i), hex(i + 1)};
  for (int j = 0; j < 6; ++j) {
    auto& row = rot[hex(j)];
    if (has_apex(j - 1)) row.push_back(apex(j - 1));
    if (has_apex(j)) row.push_back(apex(j));
    row.push_back(hex(j + 1));
    row.push_back(hex(j - 1));
  }
  FaceWalk outer = t > 0 ? trace_face_from(rot, apex(0), hex(1)) : trace_face_from(rot, hex(0), hex(1));
  Json provenance;
  provenance["generator"] = "hexagon_triangles";
  provenance["version"] = kGeneratorVersion;
  provenance["triangles"] = t;
  return {PlanarGraph::build(t + 6, std::move(rot), std::move(outer)),
          std::string("gadget:hexagon_triangles") + (t == 6 ? "" : "_" + std::to_string(t)),
          std::move(provenance)};
}

Instance gadget_three_triangles_hub() {
  using L = HubGadgetLabels;
  Rotation rot(10);
  rot[L::hub] = {L::z(0), L::z(1), L::z(2)};
  for (int i = 0; i < 3; ++i) {
    rot[L::z(i)] = {L::hub, L::x(i), L::y(i)};
    rot[L::x(i)] = {L::z(i), L::y(i)};
    rot[L::y(i)] = {L::x(i), L::z(i)};
  }
  FaceWalk outer = trace_face_from(rot, L::x(0), L::y(0));
  Json provenance;
  provenance["generator"] = "three_triangles_hub";
  provenance["version"] = kGeneratorVersion;
  return {PlanarGraph::build(10, std::move(rot), std::move(outer)), std::string("gadget:three_triangles_hub"),
          std::move(provenance)};
}

namespace {

// Portable draws on top of mt19937_64 (whose output sequence is fixed by
// the standard, unlike the distribution classes).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

class EmbeddingBuilder {
 public:
  explicit EmbeddingBuilder(ForbiddenCycles forbidden) : forbidden_(forbidden) {}

  void start_cycle(int length) {
    for (int i = 0; i < length; ++i) add_vertex();
    for (int i = 0; i < length; ++i) {
      const VertexId prev = (i + length - 1) % length;
      const VertexId next = (i + 1) % length;
      rot_[i] = {prev, next};
      adj_[i] = {std::min(prev, next), std::max(prev, next)};
    }
  }

  int size() const { return static_cast<int>(rot_.size()); }
  const Rotation& rotation() const { return rot_; }

  std::pair<VertexId, VertexId> random_half_edge(Rng& rng) const {
    const auto u = static_cast<VertexId>(rng.below(rot_.size()));
    const auto& row = rot_[u];
    return {u, row[rng.below(row.size())]};
  }

  // Next directed edge along the same face.
  std::pair<VertexId, VertexId> next(std::pair<VertexId, VertexId> h) const {
    const auto& row = rot_[h.second];
    auto it = std::find(row.begin(), row.end(), h.first);
    const auto idx = static_cast<std::size_t>(it - row.begin());
    return {h.second, row[(idx + 1) % row.size()]};
  }

  // Joining `u` and `w` by a new path with `edges` edges closes a cycle of
  // length edges + m for every simple u-w path of length m.
  bool path_is_safe(VertexId u, VertexId w, int edges) {
    const int lo = forbidden_.min_length - edges;
    const int hi = forbidden_.max_length - edges;
    if (hi < 1) return true;
    if (lo <= 1 && std::binary_search(adj_[u].begin(), adj_[u].end(), w)) return false;
    if (hi < 2) return true;
    on_path_.resize(rot_.size(), 0);
    on_path_[u] = 1;
    const bool hit = probe(u, w, 0, std::max(lo, 2), hi);
    on_path_[u] = 0;
    return !hit;
  }

  // Inserts a path with `edges` edges from the corner of u just before
  // `u_before` to the corner of w just before `w_before`.
  void insert_path(VertexId u, VertexId u_before, VertexId w, VertexId w_before, int edges) {
    std::vector<VertexId> inner;
    for (int i = 0; i + 1 < edges; ++i) inner.push_back(add_vertex());
    std::vector<VertexId> chain{u};
    chain.insert(chain.end(), inner.begin(), inner.end());
    chain.push_back(w);
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) rot_[chain[i]] = {chain[i - 1], chain[i + 1]};
    insert_before(u, chain[1], u_before);
    insert_before(w, chain[chain.size() - 2], w_before);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1]);
  }

  void insert_pendant(VertexId u, VertexId before) {
    const VertexId x = add_vertex();
    rot_[x] = {u};
    insert_before(u, x, before);
    link(u, x);
  }

 private:
  VertexId add_vertex() {
    rot_.emplace_back();
    adj_.emplace_back();
    return static_cast<VertexId>(rot_.size() - 1);
  }

  void insert_before(VertexId v, VertexId added, VertexId before) {
    auto& row = rot_[v];
    row.insert(std::find(row.begin(), row.end(), before), added);
  }

  void link(VertexId a, VertexId b) {
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  }

  bool probe(VertexId v, VertexId target, int depth, int lo, int hi) {
    for (VertexId x : adj_[v]) {
      if (x == target) {
        if (depth == 0) continue;  // the direct edge is handled separately
        if (depth + 1 >= lo && depth + 1 <= hi) return true;
        continue;
      }
      if (on_path_[x] || depth + 1 >= hi) continue;
      on_path_[x] = 1;
      const bool hit = probe(x, target, depth + 1, lo, hi);
      on_path_[x] = 0;
      if (hit) return true;
    }
    return false;
  }

  ForbiddenCycles forbidden_;
  Rotation rot_;
  Adjacency adj_;
  std::vector<char> on_path_;
};

constexpr int kAttemptsPerStep = 64;
constexpr int kMaxPathEdges = 7;
constexpr int kMaxCornerGap = 8;

}  // namespace

Instance gen_random_g6(int n, double attach_probability, std::uint64_t seed, ForbiddenCycles forbidden) {
  if (n < 3) throw std::invalid_argument("random instances need at least 3 vertices");
  if (!(attach_probability >= 0.0 && attach_probability <= 1.0)) {
    throw std::invalid_argument("attach probability must lie in [0, 1]");
  }
  Rng rng(seed);
  EmbeddingBuilder builder(forbidden);
  const int min_cycle = forbidden.max_length + 1;
  if (n < min_cycle) {
    builder.start_cycle(3);
  } else {
    const int span = std::min(n, min_cycle + 4) - min_cycle + 1;
    builder.start_cycle(min_cycle + static_cast<int>(rng.below(static_cast<std::uint64_t>(span))));
  }

  while (builder.size() < n) {
    const int remaining = n - builder.size();
    bool grown = false;
    for (int attempt = 0; attempt < kAttemptsPerStep && !grown; ++attempt) {
      auto h = builder.random_half_edge(rng);
      int edges = 2;
      int gap = 1;
      if (!rng.chance(attach_probability) && remaining >= 2) {
        const int longest = std::min(kMaxPathEdges, remaining + 1);
        edges = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(longest - 2)));
        gap = 1 + static_cast<int>(rng.below(kMaxCornerGap));
      }
      auto far = h;
      bool wrapped = false;
      for (int k = 0; k < gap; ++k) {
        far = builder.next(far);
        if (far == h) wrapped = true;
      }
      if (wrapped) continue;
      const VertexId u = h.first;
      const VertexId w = far.first;
      if (u == w || !builder.path_is_safe(u, w, edges)) continue;
      builder.insert_path(u, h.second, w, far.second, edges);
      grown = true;
    }
    if (!grown) {
      auto h = builder.random_half_edge(rng);
      builder.insert_pendant(h.first, h.second);
    }
  }

  Rotation rot = builder.rotation();
  FaceWalk outer = trace_face_from(rot, 0, 1);
  Json provenance;
  provenance["generator"] = "random_g6";
  provenance["version"] = kGeneratorVersion;
  provenance["n"] = n;
  provenance["attach_probability"] = attach_probability;
  provenance["forbidden"] = {forbidden.min_length, forbidden.max_length};
  return {PlanarGraph::build(n, std::move(rot), std::move(outer)), seed, std::move(provenance)};
}

Json instance_to_json(const Instance& instance) {
  Json doc = graph_to_json(instance.graph);
  std::visit([&doc](const auto& s) { doc["seed"] = s; }, instance.seed);
  doc["provenance"] = instance.provenance;
  return doc;
}

Instance instance_from_json(const Json& doc) {
  PlanarGraph g = graph_from_json(doc);
  InstanceSeed seed = std::string("unknown");
  if (doc.contains("seed")) {
    const auto& s = doc["seed"];
    if (s.is_number_unsigned() || s.is_number_integer()) {
      seed = s.get<std::uint64_t>();
    } else if (s.is_string()) {
      seed = s.get<std::string>();
    } else {
      throw FormatError("field 'seed' must be an integer or a string");
    }
  }
  Json provenance = doc.contains("provenance") ? doc["provenance"] : Json::object();
  return {std::move(g), std::move(seed), std::move(provenance)};
}

std::string seed_label(const InstanceSeed& seed) {
  if (const auto* s = std::get_if<std::uint64_t>(&seed)) return std::to_string(*s);
  return std::get<std::string>(seed);
}

}  // namespace spiralcolor
