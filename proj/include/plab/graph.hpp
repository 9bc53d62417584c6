#pragma once

// Undirected simple graphs and the standard constructions used throughout
// the workbench: families, vAB gadgets, Cartesian products and t-blowups.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace plab {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised for invalid construction parameters (sizes, factor lists, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProductCoordinate {
  std::vector<Vertex> coords;  // one index per factor
  bool operator==(const ProductCoordinate&) const = default;
};

struct BlowupLabel {
  Vertex shadow = 0;
  int copy = 0;
  bool operator==(const BlowupLabel&) const = default;
};

using VertexLabel = std::variant<std::monostate, ProductCoordinate, BlowupLabel>;

// Dense 0-based vertex ids, CSR adjacency with sorted neighbor lists.
// Labels are side metadata only; nothing in the solver reads them.
class Graph {
 public:
  Graph() = default;

  // Throws ParameterError on loops, duplicate edges or out-of-range ids.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  int edge_count() const { return static_cast<int>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  int min_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(Vertex v) const;
  void set_labels(std::vector<VertexLabel> labels);

  // FNV-1a over the literal adjacency encoding. Isomorphic but relabeled
  // graphs hash differently.
  std::uint64_t adjacency_hash() const;

  bool connected() const;
  std::vector<int> distances_from(Vertex source) const;  // -1 = unreachable

  // Throws std::logic_error if an adjacency invariant is broken.
  void check_invariants() const;

  bool operator==(const Graph& other) const {
    return offsets_ == other.offsets_ && targets_ == other.targets_;
  }

 private:
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<VertexLabel> labels_;
};

// All-pairs BFS distances, row-major; -1 for unreachable pairs.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int diameter() const;
  int vertex_count() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

enum class Family { Path, Cycle, Complete, CompleteBipartite, Hypercube };

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family f);

// sizes: one entry for every family except CompleteBipartite (two).
Graph build_family(Family family, std::span<const int> sizes);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph hypercube_graph(int dim);
Graph petersen_graph();
// Apex 0 joined to every vertex of the path 1..n-1.
Graph fan_graph(int n);

// Vertex 0 is v, then A = 1..a, then B = a+1..a+b.
Graph vab_graph(int a, int b);

// Vertex id is mixed-radix with the last factor varying fastest; every
// vertex carries a ProductCoordinate label.
Graph cartesian_product(std::span<const Graph> factors);
Vertex product_vertex(std::span<const int> factor_sizes, std::span<const Vertex> coords);

// Copy c of base vertex v has id v * t + c and a BlowupLabel.
Graph blowup(const Graph& base, int t);

// Two-coloring of a connected graph; side[v] in {0, 1} with side[0] = 0.
// Absent for non-bipartite graphs; throws ParameterError when disconnected.
std::optional<std::vector<int>> two_coloring(const Graph& g);

struct Bipartition {
  std::vector<Vertex> x;  // contains vertex 0
  std::vector<Vertex> y;
};
std::optional<Bipartition> bipartition(const Graph& g);

}  // namespace plab
