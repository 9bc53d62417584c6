#pragma once

// Graph and embedding serialization:
//   JSON       {"n": int, "edges": [[u,v],...], "labels": [...]}  (labels optional)
//   edge list  one "u v" pair per line, '#' starts a comment
// Both are 0-indexed.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "plab/graph.hpp"
#include "plab/outerplanar.hpp"

namespace plab {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string graph_to_edge_list(const Graph& g);
// Vertex count is 1 + the largest id seen unless a "# n=<count>" header is present.
Graph graph_from_edge_list(std::istream& in);

nlohmann::json embedding_to_json(const OuterplanarEmbedding& e);
OuterplanarEmbedding embedding_from_json(const nlohmann::json& j);

// Dispatches on extension: .json or anything else as an edge list.
Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace plab
