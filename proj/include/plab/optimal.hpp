#pragma once

// Controllers read off a solved table. Tie-breaks are lowest vertex id.

#include <memory>
#include <optional>

#include "plab/solver.hpp"
#include "plab/strategy.hpp"

namespace plab {

class OptimalCop : public CopStrategy {
 public:
  // Without a placement the lowest-rank winning multiset is used, falling
  // back to the multiset that wins against the most robber starts.
  explicit OptimalCop(std::shared_ptr<const SolveTable> table, std::optional<std::vector<Vertex>> placement = {});

  std::string name() const override { return "optimal"; }
  int cop_count() const override { return table_->cops(); }
  MovementRule rule() const override { return table_->rule(); }
  std::vector<Vertex> place() override;
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<OptimalCop>(*this); }

 private:
  std::shared_ptr<const SolveTable> table_;
  std::vector<Vertex> positions_;
};

class OptimalRobber : public RobberStrategy {
 public:
  explicit OptimalRobber(std::shared_ptr<const SolveTable> table, std::optional<Vertex> start = {});

  std::string name() const override { return "optimal-robber"; }
  MovementRule rule() const override { return table_->rule(); }
  Vertex place(std::span<const Vertex> cops) override;
  Vertex respond(std::span<const Vertex> cops) override;
  std::string memo_key() const override;
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<OptimalRobber>(*this); }

 private:
  std::shared_ptr<const SolveTable> table_;
  std::optional<Vertex> start_;
  Vertex position_ = -1;
};

// Placement used by OptimalCop when none is given.
std::vector<Vertex> best_placement(const SolveTable& table);

}  // namespace plab
