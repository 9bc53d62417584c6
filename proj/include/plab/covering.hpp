#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

// image[v] is the target vertex of source vertex v.
struct CoveringMap {
  Graph source;
  Graph target;
  std::vector<Vertex> image;
};

// nullopt when the map is a surjective local bijection; otherwise names the
// first offending vertex.
std::optional<std::string> validate_covering(const CoveringMap& map);

// Product of C_{2n_i} onto product of C_{n_i}, reducing each coordinate
// modulo n_i.
CoveringMap doubled_cycle_cover(const std::vector<int>& cycle_lengths);

CoveringMap identity_cover(const Graph& g);

// The unique neighbor of `source_vertex` that maps to `target_neighbor`.
// Throws std::logic_error if the map is not locally bijective there.
Vertex lift_neighbor(const CoveringMap& map, Vertex source_vertex, Vertex target_neighbor);

}  // namespace plab
