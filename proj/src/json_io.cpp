#include "spiralcolor/json_io.hpp"

#include <fstream>
#include <sstream>

namespace spiralcolor {

Json graph_to_json(const PlanarGraph& g) {
  Json doc;
  doc["n"] = g.vertex_count();
  Json rotation = Json::array();
  for (const auto& row : g.rotation()) rotation.push_back(row);
  doc["rotation"] = std::move(rotation);
  doc["outer_face"] = std::vector<VertexId>(g.outer_face().begin(), g.outer_face().end());
  return doc;
}

namespace {

std::vector<VertexId> int_array(const Json& value, const char* field) {
  if (!value.is_array()) throw FormatError(std::string("field '") + field + "' must be an array");
  std::vector<VertexId> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_number_integer()) throw FormatError(std::string("field '") + field + "' must hold integers");
    out.push_back(item.get<VertexId>());
  }
  return out;
}

}  // namespace

PlanarGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("graph document must be a JSON object");
  for (const char* key : {"n", "rotation", "outer_face"}) {
    if (!doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  }
  if (!doc["n"].is_number_integer()) throw FormatError("field 'n' must be an integer");
  const int n = doc["n"].get<int>();
  const auto& rot = doc["rotation"];
  if (!rot.is_array()) throw FormatError("field 'rotation' must be an array");
  Rotation rotation;
  rotation.reserve(rot.size());
  for (const auto& row : rot) rotation.push_back(int_array(row, "rotation"));
  return PlanarGraph::build(n, std::move(rotation), int_array(doc["outer_face"], "outer_face"));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::string dump_compact(const Json& doc) { return doc.dump(); }

}  // namespace spiralcolor
