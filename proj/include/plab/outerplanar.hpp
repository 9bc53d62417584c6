#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

// Outer Hamiltonian cycle plus non-crossing chords of a 2-connected
// outerplanar graph.
struct OuterplanarEmbedding {
  std::vector<Vertex> outer_cycle;
  std::vector<Edge> chords;  // (u, v) with u < v
};

// Returns a description of the first violated condition, or nullopt.
std::optional<std::string> validate_embedding(const Graph& g, const OuterplanarEmbedding& embedding);

// Backtracking search for the outer cycle of a small 2-connected graph,
// accepted only if the remaining edges are non-crossing chords. Intended for
// desk-scale blocks; throws ParameterError beyond 64 vertices.
std::optional<OuterplanarEmbedding> find_outerplanar_embedding(const Graph& g);

}  // namespace plab
