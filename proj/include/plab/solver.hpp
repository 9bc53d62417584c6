#pragma once

// Exact solver for cops-and-robber games under the four movement rules.
//
// A cop round is decomposed into k individual cop moves with the robber
// frozen. The cop moved next is always the lowest-positioned pending cop,
// so a round-progress state is (moved multiset, pending multiset, robber,
// any_moved). Capture is checked after every individual move. Winners and
// optimal capture times come from a backward attractor computation:
// capture states seed a FIFO queue; a cop state joins the attractor on its
// first winning successor, a robber state when its last successor does.
//
// capture_time counts individual moves (each cop micro-move and each robber
// move is one), not rounds.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plab/graph.hpp"
#include "plab/multiset.hpp"
#include "plab/rules.hpp"

namespace plab {

inline constexpr int kMaxCops = 8;
inline constexpr std::uint16_t kNoCapture = 0xFFFF;

using StateIndex = std::uint32_t;

struct GameState {
  enum class Phase : std::uint8_t { RobberToMove, CopRound };

  Phase phase = Phase::CopRound;
  std::vector<Vertex> moved;    // CopRound: cops that already moved this round (sorted)
  std::vector<Vertex> pending;  // CopRound: cops still to move; RobberToMove: all cops (sorted)
  Vertex robber = 0;
  bool any_moved = false;

  static GameState round_start(std::vector<Vertex> cops, Vertex robber);
  static GameState robber_to_move(std::vector<Vertex> cops, Vertex robber);

  bool captured() const;
  bool operator==(const GameState&) const = default;
};

class SolverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense indexing of every game state for fixed (graph, k, rule).
class StateSpace {
 public:
  StateSpace(std::shared_ptr<const Graph> g, int cops, MovementRule rule);

  const Graph& graph() const { return *graph_; }
  int cops() const { return k_; }
  MovementRule rule() const { return rule_; }
  std::uint64_t size() const { return size_; }

  StateIndex encode(const GameState& s) const;
  GameState decode(StateIndex s) const;

  // Cops-to-move state at the start of a round; cops need not be sorted.
  StateIndex round_start(std::span<const Vertex> cops, Vertex robber) const;
  StateIndex robber_state(std::span<const Vertex> cops, Vertex robber) const;

  bool robber_to_move(StateIndex s) const { return s < robber_block_size_; }
  // Robber-to-move states occupy indices [0, robber_block_size()).
  std::uint64_t robber_block_size() const { return robber_block_size_; }
  bool is_capture(StateIndex s) const;

  // Visit (successor, moved-to vertex). For cop states the vertex is the
  // destination of the moving cop (the lowest pending cop); for robber states
  // it is the robber's destination. Capture states have no successors.
  template <class F>
  void for_each_successor(StateIndex s, F&& visit) const;

  // Visit every non-capture state with an edge into s.
  template <class F>
  void for_each_predecessor(StateIndex s, F&& visit) const;

  // Vertex of the cop that moves next at a CopRound state.
  Vertex mover(StateIndex s) const;

 private:
  struct Block {
    bool robber;
    int moved;  // cop blocks: |moved|
    bool flag;
    std::uint64_t start;
    std::uint64_t size;
  };
  struct Decoded {
    int block;
    Vertex robber;
    std::array<Vertex, kMaxCops> a{};  // robber block: cops; cop block: moved
    std::array<Vertex, kMaxCops> b{};  // cop block: pending
  };

  Decoded unpack(StateIndex s) const;
  StateIndex pack_cop(int moved, bool flag, std::span<const Vertex> m, std::span<const Vertex> p, Vertex r) const;
  StateIndex pack_robber(std::span<const Vertex> cops, Vertex r) const;
  int cop_block(int moved, bool flag) const { return cop_block_[moved][flag ? 1 : 0]; }

  std::shared_ptr<const Graph> graph_;
  int n_ = 0;
  int k_ = 0;
  MovementRule rule_;
  MultisetIndexer ms_;
  std::vector<Block> blocks_;
  std::array<std::array<int, 2>, kMaxCops> cop_block_{};
  std::uint64_t robber_block_size_ = 0;
  std::uint64_t size_ = 0;
};

enum class Winner : std::uint8_t { CopWin, RobberWin };

class SolveTable {
 public:
  SolveTable(std::shared_ptr<const StateSpace> space, std::vector<std::uint64_t> win_bits,
             std::vector<std::uint16_t> capture_time);

  const StateSpace& space() const { return *space_; }
  std::shared_ptr<const StateSpace> space_ptr() const { return space_; }
  const Graph& graph() const { return space_->graph(); }
  int cops() const { return space_->cops(); }
  MovementRule rule() const { return space_->rule(); }
  std::uint64_t graph_hash() const { return graph().adjacency_hash(); }

  Winner winner(StateIndex s) const {
    return (win_bits_[s >> 6] >> (s & 63)) & 1 ? Winner::CopWin : Winner::RobberWin;
  }
  bool cop_win(StateIndex s) const { return winner(s) == Winner::CopWin; }
  // Optimal number of remaining individual moves; kNoCapture for robber wins.
  std::uint16_t capture_time(StateIndex s) const { return time_[s]; }

  // Cops (any order) to move first against a robber at `robber`.
  bool cops_win_initial(std::span<const Vertex> cops, Vertex robber) const;
  // Placement wins against every robber placement.
  bool placement_wins(std::span<const Vertex> cops) const;
  // Lowest-rank winning cop multiset.
  std::optional<std::vector<Vertex>> first_winning_placement() const;
  bool wins_from_all_placements() const;

  const std::vector<std::uint64_t>& win_bits() const { return win_bits_; }
  const std::vector<std::uint16_t>& capture_times() const { return time_; }

  bool operator==(const SolveTable& other) const {
    return graph() == other.graph() && cops() == other.cops() && rule() == other.rule() &&
           win_bits_ == other.win_bits_ && time_ == other.time_;
  }

 private:
  std::shared_ptr<const StateSpace> space_;
  std::vector<std::uint64_t> win_bits_;
  std::vector<std::uint16_t> time_;
};

// Throws SolverError for disconnected graphs, k outside [1, kMaxCops], or a
// must-move rule on a single vertex.
SolveTable solve(const Graph& g, int cops, MovementRule rule);
SolveTable solve(std::shared_ptr<const Graph> g, int cops, MovementRule rule);

class TableCache;

// Smallest k <= k_max for which some cop placement wins; nullopt means
// "unknown, more than k_max".
std::optional<int> cop_number(const Graph& g, MovementRule rule, int k_max, TableCache* cache = nullptr);

bool wins_from_all_placements(const Graph& g, int cops, MovementRule rule);

// ---- template definitions -------------------------------------------------

namespace detail {

inline void insert_sorted(std::span<const Vertex> src, Vertex v, Vertex* out) {
  std::size_t i = 0, o = 0;
  while (i < src.size() && src[i] < v) out[o++] = src[i++];
  out[o++] = v;
  while (i < src.size()) out[o++] = src[i++];
}

inline void erase_one(std::span<const Vertex> src, std::size_t at, Vertex* out) {
  std::size_t o = 0;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (i != at) out[o++] = src[i];
}

inline bool contains(std::span<const Vertex> xs, Vertex v) {
  for (Vertex x : xs)
    if (x == v) return true;
  return false;
}

}  // namespace detail

template <class F>
void StateSpace::for_each_successor(StateIndex s, F&& visit) const {
  const Decoded d = unpack(s);
  const Block& blk = blocks_[d.block];
  const Graph& g = *graph_;
  if (blk.robber) {
    std::span<const Vertex> cops(d.a.data(), k_);
    if (detail::contains(cops, d.robber)) return;
    if (rule_.robber_may_stay()) visit(pack_cop(0, false, {}, cops, d.robber), d.robber);
    for (Vertex w : g.neighbors(d.robber)) visit(pack_cop(0, false, {}, cops, w), w);
    return;
  }
  const int j = blk.moved;
  std::span<const Vertex> moved(d.a.data(), j);
  std::span<const Vertex> pending(d.b.data(), k_ - j);
  if (detail::contains(moved, d.robber) || detail::contains(pending, d.robber)) return;
  const Vertex p = pending[0];
  const bool last = j + 1 == k_;
  std::span<const Vertex> rest = pending.subspan(1);
  std::array<Vertex, kMaxCops> next_moved{};
  auto emit = [&](Vertex c) {
    const bool moves = c != p;
    if (!micro_move_legal(rule_.cop, last, blk.flag, moves)) return;
    detail::insert_sorted(moved, c, next_moved.data());
    std::span<const Vertex> nm(next_moved.data(), j + 1);
    if (last)
      visit(pack_robber(nm, d.robber), c);
    else
      visit(pack_cop(j + 1, rule_.tracks_any_moved() && (blk.flag || moves), nm, rest, d.robber), c);
  };
  // destinations in ascending vertex order
  auto nb = g.neighbors(p);
  std::size_t i = 0;
  while (i < nb.size() && nb[i] < p) emit(nb[i++]);
  emit(p);
  while (i < nb.size()) emit(nb[i++]);
}

template <class F>
void StateSpace::for_each_predecessor(StateIndex s, F&& visit) const {
  const Decoded d = unpack(s);
  const Block& blk = blocks_[d.block];
  const Graph& g = *graph_;
  const Vertex r = d.robber;

  if (!blk.robber && blk.moved == 0) {
    // Round start: the robber just moved here.
    std::span<const Vertex> cops(d.b.data(), k_);
    auto from = [&](Vertex prev) {
      if (!detail::contains(cops, prev)) visit(pack_robber(cops, prev));
    };
    if (rule_.robber_may_stay()) from(r);
    for (Vertex w : g.neighbors(r)) from(w);
    return;
  }

  // Undo the most recent individual cop move c <- p.
  const bool into_robber_block = blk.robber;
  const int j = into_robber_block ? k_ : blk.moved;  // moved count of s
  const bool flag_after = into_robber_block ? false : blk.flag;
  std::span<const Vertex> moved(d.a.data(), j);
  std::span<const Vertex> pending(d.b.data(), into_robber_block ? 0 : k_ - j);
  const bool last = into_robber_block;
  const int prev_moved = j - 1;
  const bool flags = rule_.tracks_any_moved();

  std::array<Vertex, kMaxCops> pm{}, pp{};
  for (int i = 0; i < j; ++i) {
    if (i > 0 && moved[i] == moved[i - 1]) continue;
    const Vertex c = moved[i];
    detail::erase_one(moved, i, pm.data());
    std::span<const Vertex> prev_m(pm.data(), prev_moved);
    auto try_from = [&](Vertex p) {
      if (!pending.empty() && p > pending[0]) return;  // p must have been the lowest pending cop
      if (r == p || detail::contains(prev_m, r) || detail::contains(pending, r)) return;
      const bool moves = p != c;
      for (int f = 0; f <= (flags && prev_moved > 0 ? 1 : 0); ++f) {
        const bool flag_before = f == 1;
        if (!micro_move_legal(rule_.cop, last, flag_before, moves)) continue;
        if (flags && !last && flag_after != (flag_before || moves)) continue;
        detail::insert_sorted(pending, p, pp.data());
        visit(pack_cop(prev_moved, flag_before, prev_m, std::span<const Vertex>(pp.data(), pending.size() + 1), r));
      }
    };
    auto nb = g.neighbors(c);
    try_from(c);
    for (Vertex w : nb) try_from(w);
  }
}

}  // namespace plab
