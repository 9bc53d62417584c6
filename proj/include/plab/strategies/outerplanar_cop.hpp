#pragma once

// Two fully active cops on a connected outerplanar graph. Each 2-connected
// block is played on its outer cycle: the cops guard the two endpoints of a
// growing arc (the cop territory) and the robber is kept in the open arc
// between them. A robber outside the cops' block is replaced by the cut
// vertex it hangs from (the phantom); once a cop stands on it, the cops
// regroup there and continue in the next block.

#include <memory>
#include <optional>
#include <vector>

#include "plab/blocks.hpp"
#include "plab/outerplanar.hpp"
#include "plab/strategy.hpp"

namespace plab {

class OuterplanarCop : public CopStrategy {
 public:
  enum class Mode { Normal, Shift, Gather, Bridge };

  // `embedding` is used when g is 2-connected; otherwise every block's
  // embedding is searched for. Throws ParameterError if g is disconnected,
  // not outerplanar, or the embedding is invalid.
  explicit OuterplanarCop(std::shared_ptr<const Graph> g, std::optional<OuterplanarEmbedding> embedding = {});

  std::string name() const override { return "outerplanar"; }
  int cop_count() const override { return 2; }
  MovementRule rule() const override { return kFullyActive; }
  std::vector<Vertex> place() override;
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<OuterplanarCop>(*this); }

  Mode mode() const { return mode_; }
  // Vertices on the closed cop arc from b to a; 0 outside Normal mode.
  int territory() const;
  Vertex endpoint_a() const { return a_; }
  Vertex endpoint_b() const { return b_; }

 private:
  struct Block {
    std::vector<Vertex> cycle;  // global ids in outer-cycle order; size 2 for a bridge
    std::vector<int> pos;       // global id -> index on cycle, -1 if absent
    std::vector<Vertex> attach; // global id -> vertex of this block it hangs from
  };

  struct Shared {
    std::shared_ptr<const Graph> g;
    std::shared_ptr<const DistanceTable> dist;
    std::vector<Block> blocks;
    BlockDecomposition decomposition;
  };

  // Forward distance from x to y along the current block's cycle.
  int gap(Vertex x, Vertex y) const;
  bool inside(Vertex x, Vertex from, Vertex to) const;  // open forward arc
  Vertex step(Vertex x, int delta) const;
  bool controls(Vertex cop, Vertex v) const { return cop == v || sh_->g->adjacent(cop, v); }
  Vertex hold(Vertex cop, Vertex v) const;  // stay in N[v]
  Vertex approach(Vertex cop, Vertex target) const;

  bool normal(Vertex phantom, std::vector<Vertex>& next);
  bool shift(Vertex phantom, std::vector<Vertex>& next);
  bool gather(Vertex robber, std::vector<Vertex>& next);
  void bridge(std::vector<Vertex>& next) const;
  void check(Vertex robber) const;

  std::shared_ptr<const Shared> sh_;
  std::vector<Vertex> pos_;
  Vertex last_robber_ = -1;
  Mode mode_ = Mode::Normal;
  int block_ = 0;
  Vertex a_ = -1, b_ = -1;
  int cop_a_ = 0;           // which cop controls a; the other controls b
  Vertex target_ = -1;      // Shift: new endpoint; Gather and Bridge: gate
  bool shift_b_ = true;     // Shift: the b-cop travels to target_
  int guard_ = 0;           // Gather: cop holding the gate
};

}  // namespace plab
