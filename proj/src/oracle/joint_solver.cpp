#include "plab/oracle/joint_solver.hpp"

#include <stdexcept>

namespace plab::oracle {

namespace {

// Every joint destination tuple for the cops, filtered by the cop rule.
std::vector<std::vector<Vertex>> joint_moves(const Graph& g, CopRule rule, const std::vector<Vertex>& from) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur(from.size());
  auto rec = [&](auto&& self, std::size_t i, int movers) -> void {
    if (i == from.size()) {
      const int k = static_cast<int>(from.size());
      bool ok = true;
      if (rule == CopRule::MustMoveAll) ok = movers == k;
      if (rule == CopRule::AtLeastOne) ok = movers >= 1;
      if (rule == CopRule::AtMostOne) ok = movers <= 1;
      if (ok) out.push_back(cur);
      return;
    }
    cur[i] = from[i];
    self(self, i + 1, movers);
    for (Vertex w : g.neighbors(from[i])) {
      cur[i] = w;
      self(self, i + 1, movers + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool holds(const std::vector<Vertex>& cops, Vertex r) {
  for (Vertex c : cops)
    if (c == r) return true;
  return false;
}

}  // namespace

JointSolver::JointSolver(const Graph& g, int cops, MovementRule rule) : g_(g), n_(g.vertex_count()), k_(cops) {
  if (cops < 1 || cops > 2) throw std::invalid_argument("joint oracle supports 1 or 2 cops");
  std::size_t tuples = 1;
  for (int i = 0; i < k_; ++i) tuples *= static_cast<std::size_t>(n_);
  cop_turn_win_.assign(tuples * n_, 0);
  robber_turn_win_.assign(tuples * n_, 0);

  std::vector<std::vector<Vertex>> all(tuples);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t x = t;
    all[t].resize(k_);
    for (int i = k_ - 1; i >= 0; --i) {
      all[t][i] = static_cast<Vertex>(x % n_);
      x /= n_;
    }
  }
  std::vector<std::vector<std::vector<Vertex>>> moves(tuples);
  for (std::size_t t = 0; t < tuples; ++t) moves[t] = joint_moves(g, rule.cop, all[t]);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < tuples; ++t) {
      for (Vertex r = 0; r < n_; ++r) {
        const std::size_t at = t * n_ + r;
        if (!cop_turn_win_[at]) {
          bool win = holds(all[t], r);
          for (const auto& next : moves[t]) {
            if (win) break;
            win = holds(next, r) || robber_turn_win_[index(next, r)];
          }
          if (win) cop_turn_win_[at] = 1, changed = true;
        }
        if (!robber_turn_win_[at]) {
          bool win = true;
          if (!holds(all[t], r)) {
            auto ok = [&](Vertex to) { return holds(all[t], to) || cop_turn_win_[index(all[t], to)]; };
            if (rule.robber == RobberRule::Free && !ok(r)) win = false;
            for (Vertex w : g.neighbors(r))
              if (!ok(w)) win = false;
          }
          if (win) robber_turn_win_[at] = 1, changed = true;
        }
      }
    }
  }
}

std::size_t JointSolver::index(std::span<const Vertex> cops, Vertex robber) const {
  std::size_t t = 0;
  for (Vertex c : cops) t = t * n_ + static_cast<std::size_t>(c);
  return t * n_ + robber;
}

bool JointSolver::cops_win_cop_turn(std::span<const Vertex> cops, Vertex robber) const {
  return cop_turn_win_[index(cops, robber)];
}

bool JointSolver::cops_win_robber_turn(std::span<const Vertex> cops, Vertex robber) const {
  return robber_turn_win_[index(cops, robber)];
}

}  // namespace plab::oracle
