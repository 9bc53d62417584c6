#include "plab/strategies/adapters.hpp"

#include <algorithm>

namespace plab {

namespace {

Vertex lowest_neighbor(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  if (nb.empty()) throw StrategyError("vertex " + std::to_string(v) + " has no neighbor to move to");
  return nb.front();
}

bool step_ok(const Graph& g, Vertex from, Vertex to) { return from == to || g.adjacent(from, to); }

std::unique_ptr<CopStrategy> require(std::unique_ptr<CopStrategy> s) {
  if (!s) throw std::invalid_argument("wrapped controller is null");
  return s;
}

}  // namespace

// ---- doubling ------------------------------------------------------------

DoublingAdapter::DoublingAdapter(std::shared_ptr<const Graph> g, std::unique_ptr<CopStrategy> passive)
    : g_(std::move(g)), inner_(require(std::move(passive))) {
  if (g_->vertex_count() < 2) throw ParameterError("doubling adapter needs at least two vertices");
}

DoublingAdapter::DoublingAdapter(const DoublingAdapter& o)
    : g_(o.g_), inner_(o.inner_->clone()), imagined_(o.imagined_), real_(o.real_), leader_(o.leader_) {}

std::vector<Vertex> DoublingAdapter::place() {
  imagined_ = inner_->place();
  const int k = static_cast<int>(imagined_.size());
  real_.assign(2 * k, 0);
  leader_.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    real_[i] = imagined_[i];
    real_[k + i] = lowest_neighbor(*g_, imagined_[i]);
  }
  return real_;
}

std::vector<Vertex> DoublingAdapter::respond(Vertex robber) {
  const std::vector<Vertex> next = inner_->respond(robber);
  const int k = static_cast<int>(imagined_.size());
  if (static_cast<int>(next.size()) != k) throw StrategyError("passive controller changed its cop count");
  for (int i = 0; i < k; ++i) {
    if (!step_ok(*g_, imagined_[i], next[i]))
      throw StrategyError("passive controller emitted an illegal passive move for cop " + std::to_string(i));
    Vertex& lead = real_[leader_[i] == 0 ? i : k + i];
    Vertex& follow = real_[leader_[i] == 0 ? k + i : i];
    if (next[i] != imagined_[i]) {
      follow = lead;
      lead = next[i];
    } else {
      std::swap(lead, follow);
      leader_[i] ^= 1;
    }
  }
  imagined_ = next;
  for (int i = 0; i < k; ++i)
    if (real_[leader_[i] == 0 ? i : k + i] != imagined_[i])
      throw std::logic_error("doubling invariant broken: imagined cop vertex not covered");
  return real_;
}

std::string DoublingAdapter::memo_key() const {
  return KeyBuilder().add(inner_->memo_key()).add(imagined_).add(real_).add(leader_).str();
}

// ---- shadow passive --------------------------------------------------------

ShadowPassiveAdapter::ShadowPassiveAdapter(std::shared_ptr<const Graph> g, std::unique_ptr<CopStrategy> active)
    : g_(std::move(g)), dist_(std::make_shared<const DistanceTable>(*g_)), inner_(require(std::move(active))) {}

ShadowPassiveAdapter::ShadowPassiveAdapter(const ShadowPassiveAdapter& o)
    : g_(o.g_), dist_(o.dist_), inner_(o.inner_->clone()), real_(o.real_), last_robber_(o.last_robber_) {}

std::vector<Vertex> ShadowPassiveAdapter::place() {
  real_ = inner_->place();
  real_.push_back(0);
  last_robber_ = -1;
  return real_;
}

std::vector<Vertex> ShadowPassiveAdapter::respond(Vertex robber) {
  const int t = inner_->cop_count();
  if (last_robber_ < 0 || robber != last_robber_) {
    const auto next = inner_->respond(robber);
    if (static_cast<int>(next.size()) != t) throw StrategyError("active controller changed its cop count");
    std::copy(next.begin(), next.end(), real_.begin());
  }
  Vertex& chaser = real_[t];
  const DistanceTable& d = *dist_;
  if (chaser != robber) {
    for (Vertex w : g_->neighbors(chaser))
      if (d(w, robber) < d(chaser, robber)) {
        chaser = w;
        break;
      }
  }
  last_robber_ = robber;
  return real_;
}

std::string ShadowPassiveAdapter::memo_key() const {
  return KeyBuilder().add(inner_->memo_key()).add(real_).add(last_robber_).str();
}

// ---- same partite ----------------------------------------------------------

SamePartiteAdapter::SamePartiteAdapter(std::shared_ptr<const Graph> g, std::unique_ptr<CopStrategy> passive,
                                       SharedSide shared)
    : g_(std::move(g)), shared_(shared), inner_(require(std::move(passive))) {
  auto side = two_coloring(*g_);
  if (!side) throw ParameterError("same-partite adapter needs a bipartite graph");
  if (g_->vertex_count() < 2) throw ParameterError("same-partite adapter needs at least two vertices");
  side_ = std::move(*side);
}

SamePartiteAdapter::SamePartiteAdapter(const SamePartiteAdapter& o)
    : g_(o.g_),
      side_(o.side_),
      shared_(o.shared_),
      inner_(o.inner_->clone()),
      imagined_(o.imagined_),
      real_(o.real_),
      started_(o.started_) {}

std::vector<Vertex> SamePartiteAdapter::place() {
  imagined_ = inner_->place();
  real_ = imagined_;
  started_ = false;
  return real_;
}

std::vector<Vertex> SamePartiteAdapter::respond(Vertex robber) {
  const int k = static_cast<int>(real_.size());
  if (!started_) {
    const bool want_same = shared_ == SharedSide::CopTurn;
    for (Vertex c : real_)
      if ((side_[c] == side_[robber]) != want_same)
        throw ParameterError("initial partite condition violated: cop at " + std::to_string(c) + ", robber at " +
                             std::to_string(robber));
    started_ = true;
  }
  // A real cop next to the robber captures.
  for (int i = 0; i < k; ++i) {
    if (!g_->adjacent(real_[i], robber)) continue;
    for (int j = 0; j < k; ++j) real_[j] = j == i ? robber : lowest_neighbor(*g_, real_[j]);
    return real_;
  }

  const auto next = inner_->respond(robber);
  if (static_cast<int>(next.size()) != k) throw StrategyError("passive controller changed its cop count");
  bool imagined_capture = false;
  for (int i = 0; i < k; ++i) {
    if (!step_ok(*g_, imagined_[i], next[i]))
      throw StrategyError("passive controller emitted an illegal passive move for cop " + std::to_string(i));
    if (real_[i] != imagined_[i])
      real_[i] = imagined_[i];
    else if (next[i] != imagined_[i])
      real_[i] = next[i];
    else
      real_[i] = lowest_neighbor(*g_, next[i]);
    if (real_[i] != next[i] && !g_->adjacent(real_[i], next[i]))
      throw std::logic_error("same-partite invariant broken for cop " + std::to_string(i));
    imagined_capture = imagined_capture || next[i] == robber;
  }
  imagined_ = next;
  if (imagined_capture && std::find(real_.begin(), real_.end(), robber) == real_.end())
    throw StrategyError("parity argument failed: imagined capture on a cop turn, real cop one step behind");
  return real_;
}

std::string SamePartiteAdapter::memo_key() const {
  return KeyBuilder().add(inner_->memo_key()).add(imagined_).add(real_).add(started_ ? 1 : 0).str();
}

// ---- cover lift -------------------------------------------------------------

CoverLiftAdapter::CoverLiftAdapter(std::shared_ptr<const CoveringMap> map, std::vector<Vertex> placement,
                                   SourceFactory factory, MovementRule rule, std::string label)
    : map_(std::move(map)), placement_(std::move(placement)), factory_(std::move(factory)), rule_(rule),
      label_(std::move(label)) {
  if (!map_) throw std::invalid_argument("cover-lift needs a covering map");
  if (auto bad = validate_covering(*map_)) throw ParameterError("invalid covering map: " + *bad);
  for (Vertex v : placement_)
    if (v < 0 || v >= map_->target.vertex_count()) throw ParameterError("placement vertex out of range");
}

CoverLiftAdapter::CoverLiftAdapter(const CoverLiftAdapter& o)
    : map_(o.map_),
      placement_(o.placement_),
      factory_(o.factory_),
      rule_(o.rule_),
      label_(o.label_),
      source_(o.source_ ? o.source_->clone() : nullptr),
      imagined_robber_(o.imagined_robber_),
      real_robber_(o.real_robber_),
      imagined_cops_(o.imagined_cops_) {}

std::vector<Vertex> CoverLiftAdapter::respond(Vertex robber) {
  const CoveringMap& m = *map_;
  if (!source_) {
    const auto it = std::find(m.image.begin(), m.image.end(), robber);
    if (it == m.image.end()) throw StrategyError("robber vertex has no preimage");
    imagined_robber_ = static_cast<Vertex>(it - m.image.begin());
    source_ = factory_(imagined_robber_);
    if (!source_) throw std::invalid_argument("cover-lift source factory returned null");
    imagined_cops_ = source_->place();
    if (imagined_cops_.size() != placement_.size()) throw StrategyError("source controller has a different cop count");
    for (std::size_t i = 0; i < placement_.size(); ++i)
      if (m.image[imagined_cops_[i]] != placement_[i])
        throw StrategyError("source placement does not project onto the real placement");
  } else if (robber != real_robber_) {
    imagined_robber_ = lift_neighbor(m, imagined_robber_, robber);
  }
  real_robber_ = robber;
  imagined_cops_ = source_->respond(imagined_robber_);
  std::vector<Vertex> real(imagined_cops_.size());
  for (std::size_t i = 0; i < real.size(); ++i) real[i] = m.image[imagined_cops_[i]];
  if (m.image[imagined_robber_] != robber) throw std::logic_error("cover-lift invariant broken for the robber");
  return real;
}

std::string CoverLiftAdapter::memo_key() const {
  return KeyBuilder()
      .add(source_ ? source_->memo_key() : std::string("-"))
      .add(imagined_robber_)
      .add(real_robber_)
      .add(imagined_cops_)
      .str();
}

}  // namespace plab
