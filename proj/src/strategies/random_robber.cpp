#include "plab/strategies/random_robber.hpp"

#include <algorithm>
#include <sstream>

namespace plab {

namespace {

bool occupied(std::span<const Vertex> cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

}  // namespace

RandomRobber::RandomRobber(std::shared_ptr<const Graph> g, MovementRule rule, std::uint64_t seed)
    : g_(std::move(g)), rule_(rule), rng_(seed) {
  if (!g_ || g_->vertex_count() == 0) throw ParameterError("random robber needs a non-empty graph");
}

Vertex RandomRobber::pick(const std::vector<Vertex>& options) {
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)];
}

Vertex RandomRobber::place(std::span<const Vertex> cops) {
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g_->vertex_count(); ++v)
    if (!occupied(cops, v)) free.push_back(v);
  return pos_ = free.empty() ? 0 : pick(free);
}

Vertex RandomRobber::respond(std::span<const Vertex> cops) {
  std::vector<Vertex> options;
  if (rule_.robber_may_stay()) options.push_back(pos_);
  for (Vertex w : g_->neighbors(pos_)) options.push_back(w);
  if (options.empty()) throw StrategyError("robber has no legal move");
  std::vector<Vertex> safe;
  std::copy_if(options.begin(), options.end(), std::back_inserter(safe), [&](Vertex v) { return !occupied(cops, v); });
  return pos_ = pick(safe.empty() ? options : safe);
}

std::string RandomRobber::memo_key() const {
  std::ostringstream state;
  state << rng_;
  return KeyBuilder().add(pos_).add(state.str()).str();
}

}  // namespace plab
