#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "plab/graph.hpp"

namespace plab {

enum class CopRule : std::uint8_t {
  FreeAll,      // every cop may move or stay
  MustMoveAll,  // every cop moves to a neighbor
  AtLeastOne,   // any subset moves, but not the empty one
  AtMostOne,    // at most one cop changes vertex
};

enum class RobberRule : std::uint8_t { Free, MustMove };

struct MovementRule {
  CopRule cop = CopRule::FreeAll;
  RobberRule robber = RobberRule::Free;

  bool operator==(const MovementRule&) const = default;

  // The any_moved flag carries information only for these two rules.
  bool tracks_any_moved() const { return cop == CopRule::AtLeastOne || cop == CopRule::AtMostOne; }
  bool robber_may_stay() const { return robber == RobberRule::Free; }
  bool needs_movable_graph() const {
    return cop == CopRule::MustMoveAll || cop == CopRule::AtLeastOne || robber == RobberRule::MustMove;
  }

  std::string name() const;
};

inline constexpr MovementRule kPassive{CopRule::FreeAll, RobberRule::Free};
inline constexpr MovementRule kFullyActive{CopRule::MustMoveAll, RobberRule::MustMove};
inline constexpr MovementRule kActive{CopRule::AtLeastOne, RobberRule::MustMove};
inline constexpr MovementRule kLazy{CopRule::AtMostOne, RobberRule::Free};
inline constexpr MovementRule kAllRules[] = {kPassive, kFullyActive, kActive, kLazy};

// Accepts the preset names (passive, fully-active, active, lazy).
std::optional<MovementRule> parse_rule(std::string_view text);

// Whether one cop in a round may make the given individual move.
//   last: it is the final cop of the round; any_moved: some earlier cop
//   changed vertex this round; moves: this cop changes vertex.
constexpr bool micro_move_legal(CopRule rule, bool last, bool any_moved, bool moves) {
  switch (rule) {
    case CopRule::FreeAll: return true;
    case CopRule::MustMoveAll: return moves;
    case CopRule::AtLeastOne: return !(last && !any_moved && !moves);
    case CopRule::AtMostOne: return !(any_moved && moves);
  }
  return false;
}

// Joint-move checks used by the arena. `before`/`after` are per-cop
// positions in identity order.
bool legal_cop_round(const Graph& g, MovementRule rule, std::span<const Vertex> before,
                     std::span<const Vertex> after, std::string* why = nullptr);
bool legal_robber_move(const Graph& g, MovementRule rule, Vertex from, Vertex to, std::string* why = nullptr);

}  // namespace plab
