#include "plab/covering.hpp"

#include <algorithm>

namespace plab {

std::optional<std::string> validate_covering(const CoveringMap& map) {
  const int ns = map.source.vertex_count();
  const int nt = map.target.vertex_count();
  if (static_cast<int>(map.image.size()) != ns) return "image has wrong length";
  std::vector<char> hit(nt, 0);
  for (Vertex v = 0; v < ns; ++v) {
    Vertex x = map.image[v];
    if (x < 0 || x >= nt) return "vertex " + std::to_string(v) + " maps outside the target";
    hit[x] = 1;
  }
  for (Vertex x = 0; x < nt; ++x)
    if (!hit[x]) return "not surjective: target vertex " + std::to_string(x) + " has no preimage";
  for (Vertex v = 0; v < ns; ++v) {
    std::vector<Vertex> images;
    for (Vertex w : map.source.neighbors(v)) images.push_back(map.image[w]);
    std::sort(images.begin(), images.end());
    auto expected = map.target.neighbors(map.image[v]);
    if (!std::equal(images.begin(), images.end(), expected.begin(), expected.end()))
      return "neighborhood of vertex " + std::to_string(v) + " is not mapped bijectively onto N(" +
             std::to_string(map.image[v]) + ")";
  }
  return std::nullopt;
}

CoveringMap doubled_cycle_cover(const std::vector<int>& cycle_lengths) {
  if (cycle_lengths.empty()) throw ParameterError("need at least one cycle length");
  std::vector<Graph> big, small;
  for (int len : cycle_lengths) {
    if (len < 3) throw ParameterError("cycle lengths must be >= 3");
    big.push_back(cycle_graph(2 * len));
    small.push_back(cycle_graph(len));
  }
  CoveringMap map{cartesian_product(big), cartesian_product(small), {}};
  map.image.reserve(map.source.vertex_count());
  for (Vertex v = 0; v < map.source.vertex_count(); ++v) {
    auto coords = std::get<ProductCoordinate>(map.source.label(v)).coords;
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] %= cycle_lengths[i];
    map.image.push_back(product_vertex(cycle_lengths, coords));
  }
  return map;
}

CoveringMap identity_cover(const Graph& g) {
  CoveringMap map{g, g, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) map.image.push_back(v);
  return map;
}

Vertex lift_neighbor(const CoveringMap& map, Vertex source_vertex, Vertex target_neighbor) {
  Vertex found = -1;
  for (Vertex w : map.source.neighbors(source_vertex)) {
    if (map.image[w] != target_neighbor) continue;
    if (found >= 0) throw std::logic_error("covering map is not injective on a neighborhood");
    found = w;
  }
  if (found < 0) throw std::logic_error("move cannot be lifted through the covering map");
  return found;
}

}  // namespace plab
