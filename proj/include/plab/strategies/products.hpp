#pragma once

// Strategies on Cartesian products of trees, their blowups, and products
// of cycles.

#include <memory>
#include <utility>
#include <vector>

#include "plab/covering.hpp"
#include "plab/solver.hpp"
#include "plab/strategies/adapters.hpp"
#include "plab/strategy.hpp"

namespace plab {

// Coordinates, per-tree distances and bipartition of T_1 x ... x T_k.
class TreeProduct {
 public:
  // Throws ParameterError unless every factor is a tree on >= 2 vertices.
  explicit TreeProduct(std::vector<Graph> trees);

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  int dims() const { return static_cast<int>(trees_.size()); }
  const Graph& tree(int i) const { return trees_[i]; }

  Vertex coord(Vertex v, int i) const { return coords_[static_cast<std::size_t>(v) * dims() + i]; }
  Vertex with_coord(Vertex v, int i, Vertex value) const;
  int tree_dist(int i, Vertex a, Vertex b) const { return dist_[i](a, b); }
  int dist(Vertex u, Vertex v) const;
  // Neighbor of `from` one step closer to `to` inside tree i.
  Vertex toward(int i, Vertex from, Vertex to) const;
  int side(Vertex v) const { return side_[v]; }

 private:
  std::vector<Graph> trees_;
  std::vector<DistanceTable> dist_;
  std::shared_ptr<const Graph> graph_;
  std::vector<Vertex> coords_;
  std::vector<int> sizes_;
  std::vector<int> side_;
};

// One fully active cop on T_1 x T_2, started at odd distance from the robber.
class TreePairCop : public CopStrategy {
 public:
  TreePairCop(std::shared_ptr<const TreeProduct> product, Vertex start = 0);

  std::string name() const override { return "tree-pair"; }
  int cop_count() const override { return 1; }
  MovementRule rule() const override { return kFullyActive; }
  std::vector<Vertex> place() override { return {pos_}; }
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override { return KeyBuilder().add(pos_).add(started_ ? 1 : 0).str(); }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<TreePairCop>(*this); }

  // max{d_1, d_2} between the cop and `robber`.
  int potential(Vertex robber) const;

 private:
  std::shared_ptr<const TreeProduct> p_;
  Vertex pos_;
  bool started_ = false;
};

// Inactive coordinates per cop: the c even cops get one coordinate each,
// the d odd cops two; indices past the last coordinate collapse onto it.
std::vector<std::vector<int>> inactive_assignment(int dims, int even_cops, int odd_cops);
// (even, odd) counts the two-group placement can produce for `cops` cops.
std::vector<std::pair<int, int>> placement_splits(int cops);
inline int tree_product_cops(int dims) { return (2 * dims + 2) / 3; }

// ceil(2k/3) fully active cops on a product of k trees (or `cops` if given).
class TreeProductCop : public CopStrategy {
 public:
  explicit TreeProductCop(std::shared_ptr<const TreeProduct> product, int cops = 0);

  std::string name() const override { return "tree-product"; }
  int cop_count() const override { return static_cast<int>(pos_.size()); }
  MovementRule rule() const override { return kFullyActive; }
  std::vector<Vertex> place() override { return pos_; }
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<TreeProductCop>(*this); }

  const std::vector<std::vector<int>>& inactive() const { return inactive_; }

 private:
  Vertex move_one(int cop, Vertex robber) const;

  std::shared_ptr<const TreeProduct> p_;
  std::vector<Vertex> pos_;
  std::vector<std::vector<int>> inactive_;  // empty until the robber is placed
};

// Evades ceil(2k/3) - 1 fully active cops on a product of k trees.
class TreeProductRobber : public RobberStrategy {
 public:
  explicit TreeProductRobber(std::shared_ptr<const TreeProduct> product);

  std::string name() const override { return "tree-product-robber"; }
  MovementRule rule() const override { return kFullyActive; }
  Vertex place(std::span<const Vertex> cops) override;
  Vertex respond(std::span<const Vertex> cops) override;
  std::string memo_key() const override { return KeyBuilder().add(pos_).str(); }
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<TreeProductRobber>(*this); }

 private:
  std::shared_ptr<const TreeProduct> p_;
  Vertex pos_ = -1;
};

// Evades 2k-1 fully active cops on the t-blowup of a product of 2k-1 trees.
class BlowupRobber : public RobberStrategy {
 public:
  BlowupRobber(std::shared_ptr<const TreeProduct> base, int t);

  std::string name() const override { return "blowup-robber"; }
  MovementRule rule() const override { return kFullyActive; }
  Vertex place(std::span<const Vertex> cops) override;
  Vertex respond(std::span<const Vertex> cops) override;
  std::string memo_key() const override { return KeyBuilder().add(pos_).str(); }
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<BlowupRobber>(*this); }

  int half() const { return k_; }
  const Graph& graph() const { return *blowup_; }
  std::shared_ptr<const Graph> graph_ptr() const { return blowup_; }

 private:
  bool safe(Vertex v, std::span<const Vertex> cops) const;

  std::shared_ptr<const TreeProduct> base_;
  std::shared_ptr<const Graph> blowup_;
  int t_;
  int k_;
  Vertex pos_ = -1;
};

// Both sides of the starting-vertex count for the blowup robber:
// lower bound on |Y| and the number of Y vertices cops can cover.
struct BlowupCount {
  long long y_lower;
  long long covered_upper;
};
BlowupCount blowup_counting_bound(const std::vector<int>& tree_sizes, int t);

// k+1 fully active cops on C_{n_1} x ... x C_{n_k} with some n_i odd, via a
// passive table on the doubled product. The table must be for k+1 cops
// under the passive rule on map->source. The imagined cops start at the
// origin or at n_j e_j (j the first odd length), whichever puts them on the
// side `shared` asks for relative to the lifted robber.
std::unique_ptr<CopStrategy> odd_cycle_product_strategy(const std::vector<int>& cycle_lengths,
                                                        std::shared_ptr<const CoveringMap> map,
                                                        std::shared_ptr<const SolveTable> passive_table,
                                                        SharedSide shared = SharedSide::RobberTurn);

}  // namespace plab
