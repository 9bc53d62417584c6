#include "plab/solver.hpp"

#include <algorithm>

#include "plab/table_cache.hpp"

namespace plab {

GameState GameState::round_start(std::vector<Vertex> cops, Vertex robber) {
  std::sort(cops.begin(), cops.end());
  return GameState{Phase::CopRound, {}, std::move(cops), robber, false};
}

GameState GameState::robber_to_move(std::vector<Vertex> cops, Vertex robber) {
  std::sort(cops.begin(), cops.end());
  return GameState{Phase::RobberToMove, {}, std::move(cops), robber, false};
}

bool GameState::captured() const {
  return std::find(moved.begin(), moved.end(), robber) != moved.end() ||
         std::find(pending.begin(), pending.end(), robber) != pending.end();
}

StateSpace::StateSpace(std::shared_ptr<const Graph> g, int cops, MovementRule rule)
    : graph_(std::move(g)), n_(graph_->vertex_count()), k_(cops), rule_(rule), ms_(n_, cops) {
  if (cops < 1 || cops > kMaxCops) throw SolverError("cop count must be in [1, " + std::to_string(kMaxCops) + "]");
  for (auto& row : cop_block_) row = {-1, -1};
  std::uint64_t at = 0;
  auto add = [&](bool robber, int moved, bool flag, std::uint64_t size) {
    blocks_.push_back(Block{robber, moved, flag, at, size});
    at += size;
  };
  add(true, k_, false, ms_.count(k_) * n_);
  robber_block_size_ = at;
  for (int j = 0; j < k_; ++j) {
    const std::uint64_t size = ms_.count(j) * ms_.count(k_ - j) * n_;
    for (int f = 0; f <= (rule_.tracks_any_moved() && j > 0 ? 1 : 0); ++f) {
      cop_block_[j][f] = static_cast<int>(blocks_.size());
      add(false, j, f == 1, size);
    }
  }
  size_ = at;
  if (size_ >= (1ull << 32) - 1) throw SolverError("state space exceeds 2^32 states");
}

StateSpace::Decoded StateSpace::unpack(StateIndex s) const {
  Decoded d{};
  int b = static_cast<int>(blocks_.size()) - 1;
  while (blocks_[b].start > s) --b;
  d.block = b;
  const Block& blk = blocks_[b];
  std::uint64_t local = s - blk.start;
  d.robber = static_cast<Vertex>(local % n_);
  local /= n_;
  if (blk.robber) {
    auto cops = ms_.unrank(k_, local);
    std::copy(cops.begin(), cops.end(), d.a.begin());
    return d;
  }
  const std::uint64_t pend_count = ms_.count(k_ - blk.moved);
  auto pend = ms_.unrank(k_ - blk.moved, local % pend_count);
  auto mov = ms_.unrank(blk.moved, local / pend_count);
  std::copy(mov.begin(), mov.end(), d.a.begin());
  std::copy(pend.begin(), pend.end(), d.b.begin());
  return d;
}

StateIndex StateSpace::pack_cop(int moved, bool flag, std::span<const Vertex> m, std::span<const Vertex> p,
                                Vertex r) const {
  const Block& blk = blocks_[cop_block(moved, flag)];
  const std::uint64_t local = (ms_.rank(m) * ms_.count(k_ - moved) + ms_.rank(p)) * n_ + r;
  return static_cast<StateIndex>(blk.start + local);
}

StateIndex StateSpace::pack_robber(std::span<const Vertex> cops, Vertex r) const {
  return static_cast<StateIndex>(ms_.rank(cops) * n_ + r);
}

StateIndex StateSpace::encode(const GameState& s) const {
  auto check = [&](const std::vector<Vertex>& xs) {
    if (!std::is_sorted(xs.begin(), xs.end())) throw SolverError("state multisets must be sorted");
    for (Vertex v : xs)
      if (v < 0 || v >= n_) throw SolverError("cop position out of range");
  };
  check(s.moved);
  check(s.pending);
  if (s.robber < 0 || s.robber >= n_) throw SolverError("robber position out of range");
  if (s.phase == GameState::Phase::RobberToMove) {
    if (static_cast<int>(s.pending.size()) != k_ || !s.moved.empty()) throw SolverError("robber state needs k cops");
    return pack_robber(s.pending, s.robber);
  }
  if (static_cast<int>(s.moved.size() + s.pending.size()) != k_ || s.pending.empty())
    throw SolverError("cop-round state needs |moved| + |pending| = k with a pending cop");
  const int j = static_cast<int>(s.moved.size());
  const bool flag = rule_.tracks_any_moved() && j > 0 && s.any_moved;
  return pack_cop(j, flag, s.moved, s.pending, s.robber);
}

GameState StateSpace::decode(StateIndex s) const {
  if (s >= size_) throw SolverError("state index out of range");
  const Decoded d = unpack(s);
  const Block& blk = blocks_[d.block];
  GameState out;
  out.robber = d.robber;
  if (blk.robber) {
    out.phase = GameState::Phase::RobberToMove;
    out.pending.assign(d.a.begin(), d.a.begin() + k_);
    return out;
  }
  out.phase = GameState::Phase::CopRound;
  out.moved.assign(d.a.begin(), d.a.begin() + blk.moved);
  out.pending.assign(d.b.begin(), d.b.begin() + (k_ - blk.moved));
  out.any_moved = blk.flag;
  return out;
}

StateIndex StateSpace::round_start(std::span<const Vertex> cops, Vertex robber) const {
  std::array<Vertex, kMaxCops> sorted{};
  if (static_cast<int>(cops.size()) != k_) throw SolverError("wrong number of cops");
  std::copy(cops.begin(), cops.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + k_);
  return pack_cop(0, false, {}, std::span<const Vertex>(sorted.data(), k_), robber);
}

StateIndex StateSpace::robber_state(std::span<const Vertex> cops, Vertex robber) const {
  std::array<Vertex, kMaxCops> sorted{};
  if (static_cast<int>(cops.size()) != k_) throw SolverError("wrong number of cops");
  std::copy(cops.begin(), cops.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + k_);
  return pack_robber(std::span<const Vertex>(sorted.data(), k_), robber);
}

bool StateSpace::is_capture(StateIndex s) const {
  const Decoded d = unpack(s);
  const Block& blk = blocks_[d.block];
  if (blk.robber) return detail::contains(std::span<const Vertex>(d.a.data(), k_), d.robber);
  return detail::contains(std::span<const Vertex>(d.a.data(), blk.moved), d.robber) ||
         detail::contains(std::span<const Vertex>(d.b.data(), k_ - blk.moved), d.robber);
}

Vertex StateSpace::mover(StateIndex s) const {
  const Decoded d = unpack(s);
  if (blocks_[d.block].robber) throw SolverError("robber-to-move state has no moving cop");
  return d.b[0];
}

SolveTable::SolveTable(std::shared_ptr<const StateSpace> space, std::vector<std::uint64_t> win_bits,
                       std::vector<std::uint16_t> capture_time)
    : space_(std::move(space)), win_bits_(std::move(win_bits)), time_(std::move(capture_time)) {
  if (time_.size() != space_->size() || win_bits_.size() != (space_->size() + 63) / 64)
    throw SolverError("table arrays do not match the state space");
}

bool SolveTable::cops_win_initial(std::span<const Vertex> cops, Vertex robber) const {
  return cop_win(space_->round_start(cops, robber));
}

bool SolveTable::placement_wins(std::span<const Vertex> cops) const {
  for (Vertex r = 0; r < graph().vertex_count(); ++r)
    if (!cops_win_initial(cops, r)) return false;
  return true;
}

namespace {

// Calls f(multiset) for every sorted k-multiset in colex rank order until f
// returns true.
template <class F>
bool any_multiset(int n, int k, F&& f) {
  MultisetIndexer ms(n, k);
  for (std::uint64_t r = 0; r < ms.count(k); ++r) {
    auto m = ms.unrank(k, r);
    if (f(m)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> SolveTable::first_winning_placement() const {
  std::optional<std::vector<Vertex>> found;
  any_multiset(graph().vertex_count(), cops(), [&](std::span<const Vertex> m) {
    if (!placement_wins(m)) return false;
    found.emplace(m.begin(), m.end());
    return true;
  });
  return found;
}

bool SolveTable::wins_from_all_placements() const {
  return !any_multiset(graph().vertex_count(), cops(), [&](std::span<const Vertex> m) { return !placement_wins(m); });
}

SolveTable solve(const Graph& g, int cops, MovementRule rule) {
  return solve(std::make_shared<const Graph>(g), cops, rule);
}

SolveTable solve(std::shared_ptr<const Graph> g, int cops, MovementRule rule) {
  if (g->vertex_count() < 1 || !g->connected()) throw SolverError("solve needs a connected graph");
  if (cops < 1) throw SolverError("need at least one cop");
  if (rule.needs_movable_graph() && g->vertex_count() < 2)
    throw SolverError("must-move rules need at least two vertices");
  auto space = std::make_shared<const StateSpace>(std::move(g), cops, rule);
  const StateSpace& sp = *space;
  const std::uint64_t total = sp.size();

  std::vector<std::uint16_t> time(total, kNoCapture);
  std::vector<std::uint64_t> win((total + 63) / 64, 0);
  // Robber states wait for every successor; cop states need only one.
  const std::uint64_t robber_states = sp.robber_block_size();
  std::vector<std::uint8_t> remaining(robber_states, 0);

  std::vector<StateIndex> queue;
  queue.reserve(total / 4 + 16);
  auto mark = [&](StateIndex s, std::uint16_t t) {
    time[s] = t;
    win[s >> 6] |= 1ull << (s & 63);
    queue.push_back(s);
  };

  for (std::uint64_t i = 0; i < total; ++i) {
    const auto s = static_cast<StateIndex>(i);
    if (sp.is_capture(s)) {
      mark(s, 0);
    } else if (i < robber_states) {
      int count = 0;
      sp.for_each_successor(s, [&](StateIndex, Vertex) { ++count; });
      if (count == 0 || count > 255) throw SolverError("robber successor count out of range");
      remaining[i] = static_cast<std::uint8_t>(count);
    }
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const StateIndex s = queue[head];
    const std::uint16_t t = time[s];
    if (t + 1 >= kNoCapture) throw SolverError("capture time overflow");
    sp.for_each_predecessor(s, [&](StateIndex p) {
      if (time[p] != kNoCapture) return;
      if (p < robber_states) {
        if (--remaining[p] == 0) mark(p, static_cast<std::uint16_t>(t + 1));
      } else {
        mark(p, static_cast<std::uint16_t>(t + 1));
      }
    });
  }
  return SolveTable(std::move(space), std::move(win), std::move(time));
}

std::optional<int> cop_number(const Graph& g, MovementRule rule, int k_max, TableCache* cache) {
  auto shared = std::make_shared<const Graph>(g);
  for (int k = 1; k <= k_max; ++k) {
    std::shared_ptr<const SolveTable> table;
    if (cache) {
      table = cache->get_or_solve(shared, k, rule);
    } else {
      table = std::make_shared<const SolveTable>(solve(shared, k, rule));
    }
    if (table->first_winning_placement()) return k;
  }
  return std::nullopt;
}

bool wins_from_all_placements(const Graph& g, int cops, MovementRule rule) {
  return solve(g, cops, rule).wins_from_all_placements();
}

}  // namespace plab
