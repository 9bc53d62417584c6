#pragma once

// Seeded, reproducible test-corpus generators. Equal (params, seed) always
// produce identical graphs.

#include <cstdint>
#include <utility>

#include "plab/graph.hpp"
#include "plab/outerplanar.hpp"

namespace plab {

// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// G(n, p) samples, rejected until connected.
Graph random_connected(int n, double p, std::uint64_t seed);

// Uniformly random triangulation of a convex n-gon, with vertex ids
// shuffled so the outer cycle is not simply 0..n-1.
std::pair<Graph, OuterplanarEmbedding> random_maximal_outerplanar(int n, std::uint64_t seed);

}  // namespace plab
