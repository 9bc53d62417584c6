#pragma once

#include <memory>
#include <random>

#include "plab/strategy.hpp"

namespace plab {

// Seeded uniform robber: starts on a random cop-free vertex and steps to a
// random legal vertex, avoiding cops when it can.
class RandomRobber : public RobberStrategy {
 public:
  RandomRobber(std::shared_ptr<const Graph> g, MovementRule rule, std::uint64_t seed);

  std::string name() const override { return "random"; }
  MovementRule rule() const override { return rule_; }
  Vertex place(std::span<const Vertex> cops) override;
  Vertex respond(std::span<const Vertex> cops) override;
  // The generator state is part of the key, so equal keys replay equally.
  std::string memo_key() const override;
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<RandomRobber>(*this); }

 private:
  Vertex pick(const std::vector<Vertex>& options);

  std::shared_ptr<const Graph> g_;
  MovementRule rule_;
  std::mt19937_64 rng_;
  Vertex pos_ = 0;
};

}  // namespace plab
