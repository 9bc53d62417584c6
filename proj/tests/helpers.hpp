#pragma once

#include <memory>
#include <vector>

#include "plab/multiset.hpp"
#include "plab/solver.hpp"

namespace plab::testing {

inline std::shared_ptr<const SolveTable> table_for(const Graph& g, int k, MovementRule rule) {
  return std::make_shared<const SolveTable>(solve(g, k, rule));
}

inline std::vector<std::vector<Vertex>> all_placements(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  const MultisetIndexer ms(n, k);
  for (std::uint64_t r = 0; r < ms.count(k); ++r) {
    auto c = ms.unrank(k, r);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

inline std::vector<Graph> path_factors(std::initializer_list<int> sizes) {
  std::vector<Graph> out;
  for (int s : sizes) out.push_back(path_graph(s));
  return out;
}

}  // namespace plab::testing
