#include "spiralcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spiralcolor {

OracleVerdict OracleVerdict::colorable(Coloring witness, std::uint64_t fingerprint) {
  OracleVerdict v;
  v.kind = Kind::colorable;
  v.witness = std::move(witness);
  v.graph_fingerprint = fingerprint;
  return v;
}

std::string_view to_string(OracleVerdict::Kind kind) {
  switch (kind) {
    case OracleVerdict::Kind::colorable: return "colorable";
    case OracleVerdict::Kind::not_colorable: return "not_colorable";
    case OracleVerdict::Kind::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

std::string_view to_string(CrossCheck c) {
  switch (c) {
    case CrossCheck::consistent_success: return "consistent_success";
    case CrossCheck::heuristic_incomplete: return "heuristic_incomplete";
    case CrossCheck::counterexample_candidate: return "counterexample_candidate";
    case CrossCheck::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

class Backtracker {
 public:
  Backtracker(const Adjacency& adj, std::uint64_t budget)
      : adj_(adj), budget_(budget), domain_(adj.size(), 0b111), color_(adj.size(), -1) {}

  OracleVerdict run() {
    OracleVerdict verdict;
    const bool found = search(0, -1);
    verdict.nodes_explored = nodes_;
    if (found) {
      verdict.kind = OracleVerdict::Kind::colorable;
      verdict.witness.resize(adj_.size());
      for (std::size_t v = 0; v < adj_.size(); ++v) verdict.witness[v] = color_from_rank(color_[v] + 1);
    } else {
      verdict.kind = exhausted_ ? OracleVerdict::Kind::budget_exhausted : OracleVerdict::Kind::not_colorable;
    }
    return verdict;
  }

 private:
  VertexId pick() const {
    VertexId best = -1;
    int best_size = 4;
    std::size_t best_degree = 0;
    for (VertexId v = 0; v < static_cast<VertexId>(adj_.size()); ++v) {
      if (color_[v] >= 0) continue;
      const int size = std::popcount(domain_[v]);
      const std::size_t degree = adj_[v].size();
      if (size < best_size || (size == best_size && degree > best_degree)) {
        best = v;
        best_size = size;
        best_degree = degree;
      }
    }
    return best;
  }

  bool search(std::size_t assigned, int max_used) {
    if (assigned == adj_.size()) return true;
    const VertexId v = pick();
    const int limit = std::min(2, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (!(domain_[v] & (1u << c))) continue;
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      color_[v] = c;
      bool wiped = false;
      const std::size_t mark = trail_.size();
      for (VertexId u : adj_[v]) {
        if (color_[u] >= 0 || !(domain_[u] & (1u << c))) continue;
        domain_[u] &= ~(1u << c);
        trail_.push_back(u);
        if (domain_[u] == 0) wiped = true;
      }
      if (!wiped && search(assigned + 1, std::max(max_used, c))) return true;
      while (trail_.size() > mark) {
        domain_[trail_.back()] |= (1u << c);
        trail_.pop_back();
      }
      color_[v] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const Adjacency& adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<unsigned> domain_;
  std::vector<int> color_;
  std::vector<VertexId> trail_;
};

}  // namespace

OracleVerdict exact_3color(const Adjacency& adj, std::uint64_t node_budget) {
  if (node_budget == 0) throw std::invalid_argument("node budget must be positive");
  Backtracker search(adj, node_budget);
  OracleVerdict verdict = search.run();
  if (verdict.kind == OracleVerdict::Kind::colorable && !verify(adj, verdict.witness).empty()) {
    throw std::logic_error("oracle witness is not a proper coloring");
  }
  return verdict;
}

OracleVerdict exact_3color(const PlanarGraph& g, std::uint64_t node_budget) {
  OracleVerdict verdict = exact_3color(g.adjacency(), node_budget);
  verdict.graph_fingerprint = g.fingerprint();
  return verdict;
}

CrossCheck cross_check(const PlanarGraph& g, const ColoringOutcome& heuristic,
                       const OracleVerdict& verdict, ForbiddenCycles lengths) {
  if (heuristic.graph_fingerprint != g.fingerprint() || verdict.graph_fingerprint != g.fingerprint()) {
    throw CrossCheckError("heuristic outcome and oracle verdict refer to different graphs");
  }
  switch (verdict.kind) {
    case OracleVerdict::Kind::budget_exhausted:
      return heuristic.ok() ? CrossCheck::consistent_success : CrossCheck::inconclusive;
    case OracleVerdict::Kind::not_colorable:
      if (heuristic.ok()) throw std::logic_error("heuristic colored a graph the oracle rejects");
      if (!is_g6(g, lengths)) {
        throw CrossCheckError("non-colorable graph has forbidden short cycles; outside the claim");
      }
      return CrossCheck::counterexample_candidate;
    case OracleVerdict::Kind::colorable:
      return heuristic.ok() ? CrossCheck::consistent_success : CrossCheck::heuristic_incomplete;
  }
  return CrossCheck::inconclusive;
}

}  // namespace spiralcolor
