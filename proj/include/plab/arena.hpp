#pragma once

// Games between controllers, and exhaustive checks of one controller
// against every behavior of the opposing side.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plab/strategy.hpp"

namespace plab {

enum class Outcome { Capture, Survived, CycleProven, Invalid };
std::string outcome_name(Outcome o);

struct RoundRecord {
  std::vector<Vertex> cops;  // after the cop round, identity order
  Vertex robber = -1;        // after the robber move; -1 if the round ended in capture
};

struct Transcript {
  std::string graph_id;
  MovementRule rule;
  int cops = 0;
  std::string cop_controller;
  std::string robber_controller;
  std::uint64_t seed = 0;

  std::vector<Vertex> cop_placement;
  Vertex robber_placement = -1;
  std::vector<RoundRecord> rounds;

  Outcome outcome = Outcome::Survived;
  // Capture: round of capture (0 = robber placed on a cop). Survived: the bound.
  int outcome_round = 0;
  std::string culprit;  // Invalid: "cops" or "robber"
  std::string reason;

  nlohmann::json to_json() const;
};

Transcript play(const Graph& g, MovementRule rule, CopStrategy& cops, RobberStrategy& robber, int round_bound,
                std::string graph_id = {});

using CopFactory = std::function<std::unique_ptr<CopStrategy>()>;
using RobberFactory = std::function<std::unique_ptr<RobberStrategy>()>;

struct VerifyCopOptions {
  int round_bound = 0;  // 0 = 20 n^2
  bool memoize = true;
  // On a memo hit, recompute the controller's response and compare.
  bool check_determinism = true;
  std::optional<std::vector<Vertex>> robber_starts;  // default: every vertex
  std::string graph_id;
};

struct VerifyRobberOptions {
  // Default: every cop multiset.
  std::optional<std::vector<std::vector<Vertex>>> placements;
  bool memoize = true;
  int round_bound = 0;  // only used without memoization; 0 = 4 n
  std::string graph_id;
};

struct VerifyResult {
  bool verified = false;
  std::optional<Transcript> counterexample;  // cop check: robber escapes; robber check: Captured
  std::uint64_t nodes = 0;
  int worst_rounds = 0;  // cop check: longest forced capture over all branches
  std::string message;
};

VerifyResult exhaustive_verify_cop(const Graph& g, MovementRule rule, const CopFactory& factory,
                                   const VerifyCopOptions& options = {});
VerifyResult exhaustive_verify_robber(const Graph& g, MovementRule rule, int cops, const RobberFactory& factory,
                                      const VerifyRobberOptions& options = {});

// Writes `<dir>/<stem>.json`; returns the path.
std::filesystem::path write_transcript(const Transcript& t, const std::filesystem::path& dir, const std::string& stem);

}  // namespace plab
