#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "spiralcolor/graph.hpp"

namespace spiralcolor {

using Json = nlohmann::ordered_json;

/// Malformed input: unparsable JSON or a document with the wrong shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "rotation": [[int...]...], "outer_face": [int...]}, keys in
/// that order.
Json graph_to_json(const PlanarGraph& g);

/// Reads the graph fields of `doc` (extra keys are ignored) and builds the
/// graph. Throws FormatError on shape errors and GraphError on invalid
/// embeddings.
PlanarGraph graph_from_json(const Json& doc);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Compact single-line serialization used for files and fingerprints.
std::string dump_compact(const Json& doc);

}  // namespace spiralcolor
