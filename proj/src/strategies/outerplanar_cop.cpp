#include "plab/strategies/outerplanar_cop.hpp"

#include <algorithm>
#include <deque>

namespace plab {

namespace {

std::vector<Vertex> block_cycle(const Graph& g, const std::vector<Vertex>& verts) {
  if (verts.size() < 3) return verts;
  const auto emb = find_outerplanar_embedding(induced_subgraph(g, verts));
  if (!emb) throw ParameterError("block containing vertex " + std::to_string(verts.front()) + " is not outerplanar");
  std::vector<Vertex> out;
  for (Vertex local : emb->outer_cycle) out.push_back(verts[local]);
  return out;
}

// For each vertex, the vertex of `verts` it is reached through without
// crossing another vertex of the block.
std::vector<Vertex> attachments(const Graph& g, const std::vector<Vertex>& verts) {
  std::vector<Vertex> label(g.vertex_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex v : verts) {
    label[v] = v;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (label[w] < 0) {
        label[w] = label[v];
        queue.push_back(w);
      }
  }
  return label;
}

}  // namespace

OuterplanarCop::OuterplanarCop(std::shared_ptr<const Graph> g, std::optional<OuterplanarEmbedding> embedding) {
  if (!g || g->vertex_count() == 0) throw ParameterError("outerplanar cop needs a non-empty graph");
  if (!g->connected()) throw ParameterError("outerplanar cop needs a connected graph");
  auto sh = std::make_shared<Shared>();
  sh->g = g;
  sh->dist = std::make_shared<const DistanceTable>(*g);
  sh->decomposition = block_cut_tree(*g);
  const auto& blocks = sh->decomposition.blocks;
  if (embedding) {
    if (blocks.size() != 1 || blocks.front().size() < 3)
      throw ParameterError("an embedding can only be given for a 2-connected graph");
    if (auto bad = validate_embedding(*g, *embedding)) throw ParameterError("invalid embedding: " + *bad);
  }
  for (const auto& verts : blocks) {
    Block b;
    b.cycle = embedding ? embedding->outer_cycle : block_cycle(*g, verts);
    b.pos.assign(g->vertex_count(), -1);
    for (std::size_t i = 0; i < b.cycle.size(); ++i) b.pos[b.cycle[i]] = static_cast<int>(i);
    b.attach = attachments(*g, verts);
    sh->blocks.push_back(std::move(b));
  }
  sh_ = std::move(sh);
}

int OuterplanarCop::gap(Vertex x, Vertex y) const {
  const Block& b = sh_->blocks[block_];
  const int m = static_cast<int>(b.cycle.size());
  return ((b.pos[y] - b.pos[x]) % m + m) % m;
}

bool OuterplanarCop::inside(Vertex x, Vertex from, Vertex to) const {
  if (sh_->blocks[block_].pos[x] < 0) return false;
  int len = gap(from, to);
  if (len == 0) len = static_cast<int>(sh_->blocks[block_].cycle.size());
  const int d = gap(from, x);
  return d > 0 && d < len;
}

Vertex OuterplanarCop::step(Vertex x, int delta) const {
  const Block& b = sh_->blocks[block_];
  const int m = static_cast<int>(b.cycle.size());
  return b.cycle[((b.pos[x] + delta) % m + m) % m];
}

Vertex OuterplanarCop::hold(Vertex cop, Vertex v) const {
  if (cop != v) return v;
  const auto nb = sh_->g->neighbors(v);
  if (nb.empty()) throw StrategyError("cop at isolated vertex " + std::to_string(v));
  return nb.front();
}

Vertex OuterplanarCop::approach(Vertex cop, Vertex target) const {
  const DistanceTable& d = *sh_->dist;
  if (cop == target) return hold(cop, target);
  for (Vertex w : sh_->g->neighbors(cop))
    if (d(w, target) < d(cop, target)) return w;
  throw std::logic_error("no step toward " + std::to_string(target));
}

std::vector<Vertex> OuterplanarCop::place() {
  const Graph& g = *sh_->g;
  last_robber_ = -1;
  block_ = 0;
  a_ = b_ = target_ = -1;
  cop_a_ = guard_ = 0;
  shift_b_ = true;
  const auto& blocks = sh_->blocks;
  if (blocks.size() == 1 && blocks[0].cycle.size() >= 3) {
    const Block& b = blocks[0];
    const int m = static_cast<int>(b.cycle.size());
    std::optional<Edge> chord;
    for (const Edge& e : g.edges()) {
      const int d = ((b.pos[e.second] - b.pos[e.first]) % m + m) % m;
      if (d != 1 && d != m - 1) {
        chord = e;
        break;
      }
    }
    pos_ = chord ? std::vector<Vertex>{chord->first, chord->second} : std::vector<Vertex>{b.cycle[0], b.cycle[1]};
    mode_ = Mode::Normal;
  } else {
    pos_ = {0, 0};
    mode_ = Mode::Gather;
    target_ = 0;
  }
  return pos_;
}

std::vector<Vertex> OuterplanarCop::respond(Vertex robber) {
  const Graph& g = *sh_->g;
  if (robber < 0 || robber >= g.vertex_count())
    throw StrategyError("robber vertex " + std::to_string(robber) + " out of range");
  if (last_robber_ >= 0 && !g.adjacent(last_robber_, robber))
    throw StrategyError("robber observation inconsistent: " + std::to_string(last_robber_) + " -> " +
                        std::to_string(robber));
  last_robber_ = robber;

  if (mode_ == Mode::Normal && a_ < 0) {
    const bool forward = inside(robber, pos_[0], pos_[1]);
    cop_a_ = forward ? 0 : 1;
    a_ = pos_[cop_a_];
    b_ = pos_[1 - cop_a_];
  }

  std::vector<Vertex> next(2);
  for (int i = 0; i < 2; ++i) {
    if (!g.adjacent(pos_[i], robber)) continue;
    next[i] = robber;
    next[1 - i] = hold(pos_[1 - i], pos_[1 - i]);
    pos_ = next;
    return pos_;
  }

  for (int guard = 0; guard < 4; ++guard) {
    if (mode_ != Mode::Gather) {
      const Vertex phantom = sh_->blocks[block_].attach[robber];
      if (phantom != robber) {
        int holder = -1;
        for (int i = 0; i < 2 && holder < 0; ++i)
          if (pos_[i] == phantom) holder = i;
        for (int i = 0; i < 2 && holder < 0; ++i)
          if (controls(pos_[i], phantom)) holder = i;
        if (holder >= 0) {
          mode_ = Mode::Gather;
          target_ = phantom;
          guard_ = holder;
        }
      }
    }
    bool done = false;
    switch (mode_) {
      case Mode::Normal:
        done = normal(sh_->blocks[block_].attach[robber], next);
        break;
      case Mode::Shift:
        done = shift(sh_->blocks[block_].attach[robber], next);
        break;
      case Mode::Gather:
        done = gather(robber, next);
        break;
      case Mode::Bridge:
        bridge(next);
        done = true;
        break;
    }
    if (done) {
      pos_ = next;
      check(robber);
      return pos_;
    }
  }
  throw std::logic_error("outerplanar controller did not settle on a move");
}

bool OuterplanarCop::normal(Vertex phantom, std::vector<Vertex>& next) {
  const Graph& g = *sh_->g;
  const Block& blk = sh_->blocks[block_];
  const int ia = cop_a_, ib = 1 - cop_a_;
  const Vertex A = pos_[ia], B = pos_[ib];
  const Vertex a_next = step(a_, 1), b_prev = step(b_, -1);

  // Chords from an endpoint into the robber territory, and the one reaching
  // furthest toward the other endpoint.
  std::optional<Vertex> ra, rb;
  for (Vertex x : g.neighbors(a_))
    if (blk.pos[x] >= 0 && x != a_next && inside(x, a_, b_) && (!ra || gap(a_, x) > gap(a_, *ra))) ra = x;
  for (Vertex x : g.neighbors(b_))
    if (blk.pos[x] >= 0 && x != b_prev && inside(x, a_, b_) && (!rb || gap(a_, x) < gap(a_, *rb))) rb = x;

  if (ra) {
    const Vertex r = *ra;
    if (A != a_) {
      next[ia] = a_;
      next[ib] = hold(B, b_);
    } else if (inside(phantom, r, b_)) {
      next[ia] = r;
      next[ib] = hold(B, b_);
      a_ = r;
    } else {
      next[ia] = r;
      next[ib] = approach(B, r);
      mode_ = Mode::Shift;
      target_ = r;
      shift_b_ = true;
      if (controls(next[ib], r)) {
        b_ = r;
        mode_ = Mode::Normal;
      }
    }
    return true;
  }
  if (rb) {
    const Vertex r = *rb;
    if (B != b_) {
      next[ib] = b_;
      next[ia] = hold(A, a_);
    } else if (inside(phantom, a_, r)) {
      next[ib] = r;
      next[ia] = hold(A, a_);
      b_ = r;
    } else {
      next[ib] = r;
      next[ia] = approach(A, r);
      mode_ = Mode::Shift;
      target_ = r;
      shift_b_ = false;
      if (controls(next[ia], r)) {
        a_ = r;
        mode_ = Mode::Normal;
      }
    }
    return true;
  }

  // No chords: both endpoints creep one step inward unless the robber sits
  // on the vertex they would take.
  Vertex na = a_, nb = b_;
  if (phantom == a_next) {
    next[ia] = a_;
  } else {
    next[ia] = A == a_ ? a_next : a_;
    na = a_next;
  }
  if (phantom == b_prev) {
    next[ib] = b_;
  } else {
    next[ib] = B == b_ ? b_prev : b_;
    nb = b_prev;
  }
  a_ = na;
  b_ = nb;
  return true;
}

bool OuterplanarCop::shift(Vertex, std::vector<Vertex>& next) {
  const int osc = shift_b_ ? cop_a_ : 1 - cop_a_;
  const Vertex end = shift_b_ ? a_ : b_;
  next[osc] = pos_[osc] == end ? target_ : end;
  next[1 - osc] = approach(pos_[1 - osc], target_);
  if (controls(next[1 - osc], target_)) {
    (shift_b_ ? b_ : a_) = target_;
    mode_ = Mode::Normal;
  }
  return true;
}

bool OuterplanarCop::gather(Vertex robber, std::vector<Vertex>& next) {
  const Vertex v = target_;
  const Vertex guard = pos_[guard_], other = pos_[1 - guard_];
  if (!controls(guard, v) || !controls(other, v)) {
    next[guard_] = hold(guard, v);
    next[1 - guard_] = approach(other, v);
    return true;
  }
  // Both cops control the gate: move on to the block on the robber's side.
  int chosen = -1;
  for (int b : sh_->decomposition.blocks_of_vertex[v])
    if (sh_->blocks[b].attach[robber] != v) {
      chosen = b;
      break;
    }
  if (chosen < 0) throw std::logic_error("no block beyond gate " + std::to_string(v));
  block_ = chosen;
  if (sh_->blocks[chosen].cycle.size() == 2) {
    mode_ = Mode::Bridge;
  } else {
    mode_ = Mode::Normal;
    a_ = b_ = v;
    cop_a_ = 0;
  }
  return false;
}

void OuterplanarCop::bridge(std::vector<Vertex>& next) const {
  for (int i = 0; i < 2; ++i) {
    if (pos_[i] == target_) throw std::logic_error("bridge: cop on the gate should have advanced");
    next[i] = target_;
  }
}

void OuterplanarCop::check(Vertex robber) const {
  if (std::find(pos_.begin(), pos_.end(), robber) != pos_.end()) return;
  const Graph& g = *sh_->g;
  const Block& blk = sh_->blocks[block_];
  const Vertex phantom = blk.attach[robber];
  auto fail = [](const std::string& what) { throw std::logic_error("outerplanar invariant broken: " + what); };
  switch (mode_) {
    case Mode::Normal: {
      if (!controls(pos_[cop_a_], a_) || !controls(pos_[1 - cop_a_], b_)) fail("endpoint not controlled");
      if (!inside(phantom, a_, b_)) fail("robber outside its territory");
      for (Vertex x : g.neighbors(phantom))
        if (a_ != b_ && inside(x, b_, a_)) fail("edge from the robber into the cop territory");
      break;
    }
    case Mode::Shift: {
      const int osc = shift_b_ ? cop_a_ : 1 - cop_a_;
      const Vertex end = shift_b_ ? a_ : b_;
      if (pos_[osc] != end && pos_[osc] != target_) fail("oscillating cop left its edge");
      if (!(shift_b_ ? inside(phantom, a_, target_) : inside(phantom, target_, b_))) fail("robber escaped the chord");
      break;
    }
    case Mode::Gather:
      if (!controls(pos_[guard_], target_)) fail("gate unguarded");
      break;
    case Mode::Bridge:
      break;
  }
}

int OuterplanarCop::territory() const {
  if (mode_ != Mode::Normal || a_ < 0) return 0;
  return gap(b_, a_) + 1;
}

std::string OuterplanarCop::memo_key() const {
  return KeyBuilder()
      .add(pos_)
      .add(last_robber_)
      .add(static_cast<int>(mode_))
      .add(block_)
      .add(a_)
      .add(b_)
      .add(cop_a_)
      .add(target_)
      .add(shift_b_ ? 1 : 0)
      .add(guard_)
      .str();
}

}  // namespace plab
