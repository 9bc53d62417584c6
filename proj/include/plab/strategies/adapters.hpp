#pragma once

// Controllers that run a wrapped controller in an imagined game and
// translate its moves into a different movement rule or graph.

#include <functional>
#include <memory>

#include "plab/covering.hpp"
#include "plab/strategy.hpp"

namespace plab {

// k passive cops -> 2k fully active cops. Real cops i and k+i form a pair;
// one of them (the leader) always stands on the imagined vertex of cop i,
// the other on a neighbor of it.
class DoublingAdapter : public CopStrategy {
 public:
  DoublingAdapter(std::shared_ptr<const Graph> g, std::unique_ptr<CopStrategy> passive);
  DoublingAdapter(const DoublingAdapter& other);

  std::string name() const override { return "doubling(" + inner_->name() + ")"; }
  int cop_count() const override { return 2 * inner_->cop_count(); }
  MovementRule rule() const override { return kFullyActive; }
  std::vector<Vertex> place() override;
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<DoublingAdapter>(*this); }

  const std::vector<Vertex>& imagined() const { return imagined_; }

 private:
  std::shared_ptr<const Graph> g_;
  std::unique_ptr<CopStrategy> inner_;
  std::vector<Vertex> imagined_;
  std::vector<Vertex> real_;
  std::vector<int> leader_;  // 0: cop i leads, 1: cop k+i leads
};

// t fully active cops -> t+1 passive cops. The wrapped cops move only when
// the robber moves; the extra cop walks straight at the robber.
class ShadowPassiveAdapter : public CopStrategy {
 public:
  ShadowPassiveAdapter(std::shared_ptr<const Graph> g, std::unique_ptr<CopStrategy> active);
  ShadowPassiveAdapter(const ShadowPassiveAdapter& other);

  std::string name() const override { return "shadow-passive(" + inner_->name() + ")"; }
  int cop_count() const override { return inner_->cop_count() + 1; }
  MovementRule rule() const override { return kPassive; }
  std::vector<Vertex> place() override;
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<ShadowPassiveAdapter>(*this); }

 private:
  std::shared_ptr<const Graph> g_;
  std::shared_ptr<const DistanceTable> dist_;
  std::unique_ptr<CopStrategy> inner_;
  std::vector<Vertex> real_;
  Vertex last_robber_ = -1;
};

// When the cops and the robber must share a partite set.
//   CopTurn: before the cops' first move, i.e. every cop and the robber start
//     on one side. A capture in the imagined game on a cop turn then leaves
//     the real cop one step behind; the adapter reports it as a fault.
//   RobberTurn: before the robber's first move, i.e. the cops start on the
//     side opposite the robber. Cop-turn captures carry over exactly and
//     robber-turn captures leave a real cop adjacent.
enum class SharedSide { CopTurn, RobberTurn };

// Passive controller on a bipartite graph -> fully active cops.
class SamePartiteAdapter : public CopStrategy {
 public:
  SamePartiteAdapter(std::shared_ptr<const Graph> g, std::unique_ptr<CopStrategy> passive,
                     SharedSide shared = SharedSide::CopTurn);
  SamePartiteAdapter(const SamePartiteAdapter& other);

  std::string name() const override { return "same-partite(" + inner_->name() + ")"; }
  int cop_count() const override { return inner_->cop_count(); }
  MovementRule rule() const override { return kFullyActive; }
  std::vector<Vertex> place() override;
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<SamePartiteAdapter>(*this); }

  const std::vector<Vertex>& imagined() const { return imagined_; }
  const std::vector<Vertex>& real() const { return real_; }

 private:
  std::shared_ptr<const Graph> g_;
  std::vector<int> side_;
  SharedSide shared_;
  std::unique_ptr<CopStrategy> inner_;
  std::vector<Vertex> imagined_;
  std::vector<Vertex> real_;
  bool started_ = false;
};

// Plays a source-graph controller through a covering map. The source
// controller is built once the robber's start is known, from the lowest-id
// preimage of that start.
class CoverLiftAdapter : public CopStrategy {
 public:
  using SourceFactory = std::function<std::unique_ptr<CopStrategy>(Vertex imagined_robber_start)>;

  CoverLiftAdapter(std::shared_ptr<const CoveringMap> map, std::vector<Vertex> placement, SourceFactory factory,
                   MovementRule rule, std::string label = "cover-lift");
  CoverLiftAdapter(const CoverLiftAdapter& other);

  std::string name() const override { return label_; }
  int cop_count() const override { return static_cast<int>(placement_.size()); }
  MovementRule rule() const override { return rule_; }
  std::vector<Vertex> place() override { return placement_; }
  std::vector<Vertex> respond(Vertex robber) override;
  std::string memo_key() const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<CoverLiftAdapter>(*this); }

  Vertex imagined_robber() const { return imagined_robber_; }
  const std::vector<Vertex>& imagined_cops() const { return imagined_cops_; }

 private:
  std::shared_ptr<const CoveringMap> map_;
  std::vector<Vertex> placement_;
  SourceFactory factory_;
  MovementRule rule_;
  std::string label_;
  std::unique_ptr<CopStrategy> source_;
  Vertex imagined_robber_ = -1;
  Vertex real_robber_ = -1;
  std::vector<Vertex> imagined_cops_;
};

}  // namespace plab
