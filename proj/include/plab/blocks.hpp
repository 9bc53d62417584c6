#pragma once

#include <vector>

#include "plab/graph.hpp"

namespace plab {

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  // sorted vertex lists, ordered by smallest edge
  std::vector<std::vector<Edge>> block_edges;
  std::vector<Vertex> cut_vertices;  // sorted
  // block_of_vertex[v]: indices of the blocks containing v, ascending.
  std::vector<std::vector<int>> blocks_of_vertex;

  bool is_cut_vertex(Vertex v) const { return blocks_of_vertex[v].size() > 1; }
};

// Biconnected components of a connected graph. A single-vertex graph has
// one block holding that vertex and no edges.
BlockDecomposition block_cut_tree(const Graph& g);

// Induced subgraph on `vertices`; local id i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace plab
