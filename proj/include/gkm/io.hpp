#pragma once

// JSON interchange format for GKM graphs and DOT export.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gkm/error.hpp"
#include "gkm/graph.hpp"

namespace gkm {

/// Schema violation; path() is a JSON pointer to the offending value.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);

/// {"rank", "half_dim", "orientable", ["scale",] "vertices", "edges",
/// "star_edges"}. Unlabeled edges carry "weight": null.
Json graph_to_json(const GKMGraph& g);

/// Throws ParseError for schema violations and StructuralError (wrapped as
/// ParseError with an empty path) for invalid graphs.
GKMGraph graph_from_json(const Json& j);

GKMGraph load_graph(const std::string& path);
void save_graph(const GKMGraph& g, const std::string& path);

/// Deterministic DOT multigraph: nodes sorted by id, each edge drawn
/// separately with its weight as label, star edges as dashed half-edges.
std::string export_dot(const GKMGraph& g);

}  // namespace gkm
