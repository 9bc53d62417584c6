#include "plab/rules.hpp"

namespace plab {

std::string MovementRule::name() const {
  if (*this == kPassive) return "passive";
  if (*this == kFullyActive) return "fully-active";
  if (*this == kActive) return "active";
  if (*this == kLazy) return "lazy";
  static const char* cops[] = {"free-all", "must-move-all", "at-least-one", "at-most-one"};
  return std::string(cops[static_cast<int>(cop)]) + "/" + (robber == RobberRule::Free ? "free" : "must-move");
}

std::optional<MovementRule> parse_rule(std::string_view text) {
  if (text == "passive") return kPassive;
  if (text == "fully-active" || text == "fully_active" || text == "acop") return kFullyActive;
  if (text == "active") return kActive;
  if (text == "lazy") return kLazy;
  return std::nullopt;
}

bool legal_cop_round(const Graph& g, MovementRule rule, std::span<const Vertex> before,
                     std::span<const Vertex> after, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (before.size() != after.size()) return fail("cop count changed");
  int movers = 0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    Vertex a = before[i], b = after[i];
    if (b < 0 || b >= g.vertex_count()) return fail("cop " + std::to_string(i) + " left the graph");
    if (a == b) continue;
    if (!g.adjacent(a, b))
      return fail("cop " + std::to_string(i) + " jumped " + std::to_string(a) + "->" + std::to_string(b));
    ++movers;
  }
  const int k = static_cast<int>(before.size());
  switch (rule.cop) {
    case CopRule::FreeAll: break;
    case CopRule::MustMoveAll:
      if (movers != k) return fail("every cop must move");
      break;
    case CopRule::AtLeastOne:
      if (movers == 0) return fail("at least one cop must move");
      break;
    case CopRule::AtMostOne:
      if (movers > 1) return fail("at most one cop may move");
      break;
  }
  return true;
}

bool legal_robber_move(const Graph& g, MovementRule rule, Vertex from, Vertex to, std::string* why) {
  if (to < 0 || to >= g.vertex_count()) {
    if (why) *why = "robber left the graph";
    return false;
  }
  if (from == to) {
    if (rule.robber_may_stay()) return true;
    if (why) *why = "robber must move";
    return false;
  }
  if (!g.adjacent(from, to)) {
    if (why) *why = "robber jumped " + std::to_string(from) + "->" + std::to_string(to);
    return false;
  }
  return true;
}

}  // namespace plab
