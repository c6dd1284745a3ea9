#include "spiralcolor/serialize.hpp"

#include <sstream>

namespace spiralcolor {

namespace {

Json colors_json(const Coloring& c) {
  Json out = Json::array();
  for (const auto& entry : c) out.push_back(entry ? rank(*entry) : 0);
  return out;
}

}  // namespace

Json decomposition_to_json(const SpiralDecomposition& d) {
  Json doc;
  doc["start"] = d.start;
  doc["orientation"] = std::string(to_string(d.orientation));
  Json chains = Json::array();
  for (const auto& chain : d.chains) chains.push_back(chain.vertices);
  doc["chains"] = std::move(chains);
  return doc;
}

SpiralDecomposition decomposition_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("chains") || !doc["chains"].is_array()) {
    throw FormatError("decomposition must be an object with a 'chains' array");
  }
  SpiralDecomposition d;
  try {
    d.start = doc.value("start", 0);
    d.orientation = parse_orientation(doc.value("orientation", std::string("cw")));
    for (const auto& row : doc["chains"]) {
      SpiralChain chain;
      chain.index = static_cast<int>(d.chains.size()) + 1;
      chain.vertices = row.get<std::vector<VertexId>>();
      d.chains.push_back(std::move(chain));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad decomposition: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return d;
}

Json certificate_to_json(const FailureCertificate& cert) {
  Json doc;
  doc["vertex"] = cert.blocked;
  Json neighbors = Json::array();
  for (const auto& [u, c] : cert.neighbor_colors) neighbors.push_back({u, rank(c)});
  doc["neighbor_colors"] = std::move(neighbors);
  doc["trace_position"] = cert.trace_position;
  doc["step"] = cert.step;
  doc["rule"] = std::string(to_string(cert.during));
  return doc;
}

Json outcome_to_json(const ColoringOutcome& outcome, bool include_trace) {
  Json doc;
  doc["status"] = outcome.ok() ? "success" : "failure";
  doc["colors"] = outcome.ok() ? colors_json(outcome.colors) : Json(nullptr);
  doc["counts"] = outcome.counts;
  doc["certificate"] = outcome.certificate ? certificate_to_json(*outcome.certificate) : Json(nullptr);
  if (include_trace) {
    Json trace = Json::array();
    for (const auto& e : outcome.trace) {
      Json item;
      item["vertex"] = e.vertex;
      item["rule"] = std::string(to_string(e.rule));
      item["color"] = e.color ? rank(*e.color) : 0;
      item["step"] = e.step;
      trace.push_back(std::move(item));
    }
    doc["trace"] = std::move(trace);
  }
  return doc;
}

Json verdict_to_json(const OracleVerdict& verdict) {
  Json doc;
  doc["status"] = std::string(to_string(verdict.kind));
  const bool colorable = verdict.kind == OracleVerdict::Kind::colorable;
  doc["colors"] = colorable ? colors_json(verdict.witness) : Json(nullptr);
  doc["counts"] = colorable ? count_colors(verdict.witness) : ColorCounts{0, 0, 0};
  doc["nodes_explored"] = verdict.nodes_explored;
  return doc;
}

Coloring coloring_from_json(const Json& doc) {
  const Json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("colors")) throw FormatError("coloring document has no 'colors' field");
    arr = &doc["colors"];
  }
  if (!arr->is_array()) throw FormatError("'colors' must be an array");
  Coloring out;
  out.reserve(arr->size());
  for (const auto& item : *arr) {
    if (item.is_null()) {
      out.emplace_back();
      continue;
    }
    if (!item.is_number_integer()) throw FormatError("color entries must be integers");
    const int r = item.get<int>();
    if (r == 0) {
      out.emplace_back();
    } else if (r >= 1 && r <= 3) {
      out.emplace_back(color_from_rank(r));
    } else {
      throw FormatError("color ranks must be 1, 2 or 3");
    }
  }
  return out;
}

std::string to_dot(const PlanarGraph& g, const SpiralDecomposition& d,
                   const std::optional<ColoringOutcome>& outcome) {
  const auto chain = d.chain_of(g.vertex_count());
  std::ostringstream os;
  os << "graph spiral {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << v << " S" << chain[v] << "\", chain=" << chain[v];
    if (outcome && outcome->colors[v]) {
      const Color c = *outcome->colors[v];
      os << ", color_rank=" << rank(c) << ", style=filled, fillcolor=" << color_name(c);
    }
    os << "];\n";
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v > u) os << "  " << u << " -- " << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace spiralcolor
