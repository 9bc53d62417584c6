#include "plab/optimal.hpp"

#include <algorithm>

namespace plab {

std::vector<Vertex> best_placement(const SolveTable& table) {
  if (auto p = table.first_winning_placement()) return *p;
  const int n = table.graph().vertex_count();
  const int k = table.cops();
  const MultisetIndexer ms(n, k);
  std::vector<Vertex> best;
  int best_wins = -1;
  for (std::uint64_t r = 0; r < ms.count(k); ++r) {
    const auto cops = ms.unrank(k, r);
    int wins = 0;
    for (Vertex y = 0; y < n; ++y) wins += table.cops_win_initial(cops, y) ? 1 : 0;
    if (wins > best_wins) {
      best_wins = wins;
      best.assign(cops.begin(), cops.end());
    }
  }
  return best;
}

OptimalCop::OptimalCop(std::shared_ptr<const SolveTable> table, std::optional<std::vector<Vertex>> placement)
    : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("optimal cop needs a table");
  if (placement) {
    if (static_cast<int>(placement->size()) != table_->cops())
      throw ParameterError("placement size does not match the table's cop count");
    for (Vertex v : *placement)
      if (v < 0 || v >= table_->graph().vertex_count()) throw ParameterError("placement vertex out of range");
    positions_ = *placement;
  } else {
    positions_ = best_placement(*table_);
  }
}

std::vector<Vertex> OptimalCop::place() { return positions_; }

std::vector<Vertex> OptimalCop::respond(Vertex robber) {
  const StateSpace& sp = table_->space();
  const Graph& g = table_->graph();
  const MovementRule rule = table_->rule();
  const int k = cop_count();

  std::vector<Vertex> next = positions_;
  std::vector<bool> done(k, false);
  // The table fixes only which vertex moves next; among cops sharing it
  // the lowest index goes first.
  auto take = [&](Vertex at) {
    for (int i = 0; i < k; ++i)
      if (!done[i] && positions_[i] == at) {
        done[i] = true;
        return i;
      }
    throw StrategyError("optimal cop: no pending cop at the table's mover vertex");
  };

  StateIndex s = sp.round_start(positions_, robber);
  int moved = 0;
  bool any_moved = false;
  while (moved < k && !sp.is_capture(s)) {
    const Vertex from = sp.mover(s);
    StateIndex best_state = 0;
    Vertex best_dest = -1;
    std::uint16_t best_time = 0;
    sp.for_each_successor(s, [&](StateIndex t, Vertex dest) {
      const std::uint16_t time = table_->capture_time(t);
      if (best_dest < 0 || time < best_time) {
        best_state = t;
        best_dest = dest;
        best_time = time;
      }
    });
    if (best_dest < 0) throw StrategyError("optimal cop: state without successors");
    const int who = take(from);
    next[who] = best_dest;
    any_moved = any_moved || best_dest != from;
    ++moved;
    s = best_state;
  }

  // Captured mid-round: the remaining cops still owe a legal move.
  for (int i = 0; i < k; ++i) {
    if (done[i]) continue;
    done[i] = true;
    const bool last = ++moved == k;
    const Vertex p = positions_[i];
    Vertex pick = -1;
    auto consider = [&](Vertex c) {
      if (pick < 0 && micro_move_legal(rule.cop, last, any_moved, c != p)) pick = c;
    };
    auto nb = g.neighbors(p);
    std::size_t j = 0;
    while (j < nb.size() && nb[j] < p) consider(nb[j++]);
    consider(p);
    while (j < nb.size()) consider(nb[j++]);
    if (pick < 0) throw StrategyError("optimal cop: no legal completion of the round");
    next[i] = pick;
    any_moved = any_moved || pick != p;
  }
  positions_ = std::move(next);
  return positions_;
}

std::string OptimalCop::memo_key() const { return KeyBuilder().add(positions_).str(); }

OptimalRobber::OptimalRobber(std::shared_ptr<const SolveTable> table, std::optional<Vertex> start)
    : table_(std::move(table)), start_(start) {
  if (!table_) throw std::invalid_argument("optimal robber needs a table");
  if (start_ && (*start_ < 0 || *start_ >= table_->graph().vertex_count()))
    throw ParameterError("robber start out of range");
}

namespace {

// Higher is better for the robber.
std::uint32_t robber_score(const SolveTable& t, StateIndex s) {
  const std::uint16_t time = t.capture_time(s);
  return time == kNoCapture ? 0x10000u : time;
}

}  // namespace

Vertex OptimalRobber::place(std::span<const Vertex> cops) {
  if (start_) return position_ = *start_;
  const StateSpace& sp = table_->space();
  Vertex best = -1;
  std::uint32_t best_score = 0;
  for (Vertex y = 0; y < table_->graph().vertex_count(); ++y) {
    const std::uint32_t score = robber_score(*table_, sp.round_start(cops, y));
    if (best < 0 || score > best_score) {
      best = y;
      best_score = score;
    }
  }
  return position_ = best;
}

Vertex OptimalRobber::respond(std::span<const Vertex> cops) {
  const StateSpace& sp = table_->space();
  const StateIndex s = sp.robber_state(cops, position_);
  Vertex best = -1;
  std::uint32_t best_score = 0;
  sp.for_each_successor(s, [&](StateIndex t, Vertex dest) {
    const std::uint32_t score = robber_score(*table_, t);
    if (best < 0 || score > best_score || (score == best_score && dest < best)) {
      best = dest;
      best_score = score;
    }
  });
  if (best < 0) throw StrategyError("optimal robber: no legal move");
  return position_ = best;
}

std::string OptimalRobber::memo_key() const { return KeyBuilder().add(position_).str(); }

}  // namespace plab
