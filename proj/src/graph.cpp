#include "plab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace plab {

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) throw ParameterError("negative vertex count");
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for " + std::to_string(vertex_count) + " vertices");
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.assign(1, 0);
  for (int v = 0; v < vertex_count; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw ParameterError("duplicate edge at vertex " + std::to_string(v));
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<int>(g.targets_.size()));
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (vertex_count() == 0) return 0;
  int best = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

const VertexLabel& Graph::label(Vertex v) const {
  static const VertexLabel plain{};
  if (labels_.empty()) return plain;
  return labels_[v];
}

void Graph::set_labels(std::vector<VertexLabel> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
    throw ParameterError("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::uint64_t Graph::adjacency_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(vertex_count()));
  for (Vertex v = 0; v < vertex_count(); ++v) {
    mix(static_cast<std::uint64_t>(degree(v)));
    for (Vertex w : neighbors(v)) mix(static_cast<std::uint64_t>(w));
  }
  return h;
}

std::vector<int> Graph::distances_from(Vertex source) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return false;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

void Graph::check_invariants() const {
  for (Vertex u = 0; u < vertex_count(); ++u) {
    auto nb = neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex v = nb[i];
      if (v < 0 || v >= vertex_count()) throw std::logic_error("neighbor id out of range");
      if (v == u) throw std::logic_error("self-loop");
      if (i > 0 && nb[i - 1] >= v) throw std::logic_error("neighbor list not strictly sorted");
      if (!adjacent(v, u)) throw std::logic_error("asymmetric adjacency");
    }
  }
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.vertex_count()) {
  dist_.reserve(static_cast<std::size_t>(n_) * n_);
  for (Vertex v = 0; v < n_; ++v) {
    auto row = g.distances_from(v);
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

int DistanceTable::diameter() const {
  int best = 0;
  for (int d : dist_) best = std::max(best, d);
  return best;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete-bipartite" || name == "complete_bipartite" || name == "kbip")
    return Family::CompleteBipartite;
  if (name == "hypercube") return Family::Hypercube;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Hypercube: return "hypercube";
  }
  return "?";
}

Graph build_family(Family family, std::span<const int> sizes) {
  const std::size_t want = family == Family::CompleteBipartite ? 2 : 1;
  if (sizes.size() != want)
    throw ParameterError(family_name(family) + " expects " + std::to_string(want) + " size parameter(s)");
  switch (family) {
    case Family::Path: return path_graph(sizes[0]);
    case Family::Cycle: return cycle_graph(sizes[0]);
    case Family::Complete: return complete_graph(sizes[0]);
    case Family::CompleteBipartite: return complete_bipartite_graph(sizes[0], sizes[1]);
    case Family::Hypercube: return hypercube_graph(sizes[0]);
  }
  throw ParameterError("unknown family");
}

Graph path_graph(int n) {
  if (n < 1) throw ParameterError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw ParameterError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("complete bipartite sides must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return Graph::from_edges(m + n, edges);
}

Graph hypercube_graph(int dim) {
  if (dim < 1) throw ParameterError("hypercube dimension must be >= 1");
  std::vector<Graph> factors(dim, path_graph(2));
  return cartesian_product(factors);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph fan_graph(int n) {
  if (n < 3) throw ParameterError("fan needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(0, v);
    if (v + 1 < n) edges.emplace_back(v, v + 1);
  }
  return Graph::from_edges(n, edges);
}

Graph vab_graph(int a, int b) {
  if (a < 2 || b < 2) throw ParameterError("vab needs |A| >= 2 and |B| >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= a; ++i) {
    edges.emplace_back(0, i);
    for (Vertex j = a + 1; j <= a + b; ++j) edges.emplace_back(i, j);
  }
  for (Vertex i = a + 1; i <= a + b; ++i)
    for (Vertex j = i + 1; j <= a + b; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(1 + a + b, edges);
}

Vertex product_vertex(std::span<const int> factor_sizes, std::span<const Vertex> coords) {
  Vertex id = 0;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) id = id * factor_sizes[i] + coords[i];
  return id;
}

Graph cartesian_product(std::span<const Graph> factors) {
  if (factors.empty()) throw ParameterError("product needs at least one factor");
  std::vector<int> sizes;
  long long total = 1;
  for (const auto& f : factors) {
    if (f.vertex_count() < 1) throw ParameterError("product factor is empty");
    sizes.push_back(f.vertex_count());
    total *= f.vertex_count();
    if (total > (1 << 24)) throw ParameterError("product too large");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());
  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  std::vector<Vertex> coords(k, 0);
  for (Vertex id = 0; id < n; ++id) {
    labels.emplace_back(ProductCoordinate{coords});
    for (int i = 0; i < k; ++i) {
      const Vertex here = coords[i];
      for (Vertex w : factors[i].neighbors(here)) {
        if (w <= here) continue;
        coords[i] = w;
        edges.emplace_back(id, product_vertex(sizes, coords));
        coords[i] = here;
      }
    }
    for (int i = k - 1; i >= 0; --i) {
      if (++coords[i] < sizes[i]) break;
      coords[i] = 0;
    }
  }
  Graph g = Graph::from_edges(n, edges);
  g.set_labels(std::move(labels));
  return g;
}

Graph blowup(const Graph& base, int t) {
  if (t < 1) throw ParameterError("blowup factor t must be >= 1");
  const int n = base.vertex_count();
  std::vector<Edge> edges;
  for (auto [u, v] : base.edges())
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) edges.emplace_back(u * t + a, v * t + b);
  Graph g = Graph::from_edges(n * t, edges);
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(n) * t);
  for (Vertex v = 0; v < n; ++v)
    for (int c = 0; c < t; ++c) labels.emplace_back(BlowupLabel{v, c});
  g.set_labels(std::move(labels));
  return g;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  if (!g.connected()) throw ParameterError("bipartition of a disconnected graph is ambiguous");
  auto dist = g.distances_from(0);
  std::vector<int> side(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) side[v] = dist[v] % 2;
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) return std::nullopt;
  return side;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  auto side = two_coloring(g);
  if (!side) return std::nullopt;
  Bipartition parts;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ((*side)[v] == 0 ? parts.x : parts.y).push_back(v);
  return parts;
}

}  // namespace plab
