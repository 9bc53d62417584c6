#pragma once

// Naive reference solver: whole cop rounds as joint moves over ordered cop
// tuples, forward fixed-point iteration. Slow and small (k <= 2), used only
// to cross-check the micro-move solver.

#include <cstdint>
#include <string>
#include <vector>

#include "plab/graph.hpp"
#include "plab/rules.hpp"

namespace plab::oracle {

class JointSolver {
 public:
  JointSolver(const Graph& g, int cops, MovementRule rule);

  // cops in any order
  bool cops_win_cop_turn(std::span<const Vertex> cops, Vertex robber) const;
  bool cops_win_robber_turn(std::span<const Vertex> cops, Vertex robber) const;

 private:
  std::size_t index(std::span<const Vertex> cops, Vertex robber) const;

  const Graph& g_;
  int n_;
  int k_;
  std::vector<std::uint8_t> cop_turn_win_;
  std::vector<std::uint8_t> robber_turn_win_;
};

}  // namespace plab::oracle
