#include "spiralcolor/coloring.hpp"

#include <stdexcept>

namespace spiralcolor {

Color color_from_rank(int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("color rank must be 1, 2 or 3");
  return static_cast<Color>(r);
}

std::string_view color_name(Color c) {
  switch (c) {
    case Color::green: return "green";
    case Color::yellow: return "yellow";
    case Color::red: return "red";
  }
  return "?";
}

std::string_view to_string(TraceRule rule) {
  switch (rule) {
    case TraceRule::greedy: return "greedy";
    case TraceRule::skip_precolored: return "skip_precolored";
    case TraceRule::triangle_apex: return "triangle_apex";
    case TraceRule::reassign: return "reassign";
    case TraceRule::reassign_kept: return "reassign_kept";
    case TraceRule::blocked: return "blocked";
  }
  return "?";
}

ColoringState::ColoringState(const Adjacency& adj) : adj_(&adj), colors_(adj.size()) {}

std::optional<Color> ColoringState::smallest_available(VertexId v, std::optional<VertexId> ignore) const {
  std::array<bool, 4> used{};
  for (VertexId u : (*adj_)[v]) {
    if (ignore && u == *ignore) continue;
    if (colors_[u]) used[rank(*colors_[u])] = true;
  }
  for (Color c : kColors) {
    if (!used[rank(c)]) return c;
  }
  return std::nullopt;
}

void ColoringState::assign(VertexId v, Color c, TraceRule rule) {
  colors_[v] = c;
  trace_.push_back({v, rule, c, step_});
}

void ColoringState::block(VertexId v, TraceRule during) {
  FailureCertificate cert;
  cert.blocked = v;
  for (VertexId u : (*adj_)[v]) {
    if (colors_[u]) cert.neighbor_colors.emplace_back(u, *colors_[u]);
  }
  cert.trace_position = trace_.size();
  cert.step = step_;
  cert.during = during;
  trace_.push_back({v, TraceRule::blocked, colors_[v], step_});
  failure_ = std::move(cert);
}

bool ColoringState::greedy(VertexId v) {
  auto c = smallest_available(v);
  if (!c) {
    block(v, TraceRule::greedy);
    return false;
  }
  assign(v, *c, TraceRule::greedy);
  return true;
}

void ColoringState::skip(VertexId v) { trace_.push_back({v, TraceRule::skip_precolored, colors_[v], step_}); }

bool ColoringState::apply_triangle_rule(VertexId vj, VertexId vj_next) {
  if (!colors_[vj] || !colors_[vj_next]) {
    throw std::logic_error("triangle rule needs both chain-edge endpoints colored");
  }
  for (VertexId apex : triangle_apexes(*adj_, vj, vj_next)) {
    const Color a = *colors_[vj];
    const Color b = *colors_[vj_next];
    if (!colors_[apex]) {
      const bool green_yellow = (a == Color::green && b == Color::yellow) ||
                                (a == Color::yellow && b == Color::green);
      if (!green_yellow) continue;
      if (smallest_available(apex) != Color::red) {
        // With green and yellow on two neighbors, anything but red means red
        // is also taken.
        block(apex, TraceRule::triangle_apex);
        return false;
      }
      assign(apex, Color::red, TraceRule::triangle_apex);
      continue;
    }
    if (*colors_[apex] == Color::red) continue;

    colors_[vj].reset();
    colors_[vj_next].reset();
    auto first = smallest_available(vj, vj_next);
    std::optional<Color> second;
    if (first) {
      colors_[vj] = first;
      second = smallest_available(vj_next);
    }
    colors_[vj] = a;
    colors_[vj_next] = b;
    if (!first || !second) {
      trace_.push_back({vj, TraceRule::reassign_kept, a, step_});
      continue;
    }
    if (*first != a || *second != b) {
      assign(vj, *first, TraceRule::reassign);
      assign(vj_next, *second, TraceRule::reassign);
    }
  }
  return true;
}

namespace {

void check_cover(const PlanarGraph& g, const SpiralDecomposition& d) {
  std::vector<int> seen(g.vertex_count(), 0);
  std::size_t total = 0;
  for (const auto& chain : d.chains) {
    for (VertexId v : chain.vertices) {
      if (v < 0 || v >= g.vertex_count() || seen[v]++ > 0) {
        throw std::invalid_argument("decomposition does not match the graph's vertex set");
      }
      ++total;
    }
  }
  if (total != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("decomposition does not match the graph's vertex set");
  }
}

}  // namespace

ColoringOutcome color(const PlanarGraph& g, const SpiralDecomposition& d) {
  check_cover(g, d);
  ColoringState state(g.adjacency());
  std::size_t step = 0;
  bool ok = true;
  for (auto chain = d.chains.rbegin(); ok && chain != d.chains.rend(); ++chain) {
    const auto& vs = chain->vertices;
    for (std::size_t pos = vs.size(); ok && pos-- > 0;) {
      state.set_step(step++);
      const VertexId v = vs[pos];
      if (state.at(v)) {
        state.skip(v);
      } else if (!state.greedy(v)) {
        ok = false;
        break;
      }
      if (pos + 1 < vs.size() && !state.apply_triangle_rule(v, vs[pos + 1])) ok = false;
    }
  }

  ColoringOutcome out;
  out.graph_fingerprint = g.fingerprint();
  out.colors = state.colors();
  out.counts = count_colors(out.colors);
  out.trace = state.trace();
  if (!ok) {
    out.status = ColoringOutcome::Status::failure;
    out.certificate = state.failure();
    return out;
  }
  out.status = ColoringOutcome::Status::success;
  if (!verify(g, out.colors).empty()) throw std::logic_error("coloring produced a monochromatic edge");
  return out;
}

std::vector<ViolatedEdge> verify(const Adjacency& adj, const Coloring& c) {
  if (c.size() != adj.size()) throw std::invalid_argument("coloring size does not match the graph");
  for (const auto& entry : c) {
    if (!entry) throw std::invalid_argument("coloring is partial");
  }
  std::vector<ViolatedEdge> bad;
  for (VertexId u = 0; u < static_cast<VertexId>(adj.size()); ++u) {
    for (VertexId v : adj[u]) {
      if (v > u && *c[u] == *c[v]) bad.push_back({u, v});
    }
  }
  return bad;
}

std::vector<ViolatedEdge> verify(const PlanarGraph& g, const Coloring& c) { return verify(g.adjacency(), c); }

ColorCounts count_colors(const Coloring& c) {
  ColorCounts counts{0, 0, 0};
  for (const auto& entry : c) {
    if (entry) ++counts[rank(*entry) - 1];
  }
  return counts;
}

ColorCounts color_stats(const ColoringOutcome& outcome) {
  if (!outcome.ok()) throw std::invalid_argument("color statistics need a successful outcome");
  return count_colors(outcome.colors);
}

}  // namespace spiralcolor
