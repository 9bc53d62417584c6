#include "plab/strategies/products.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "plab/optimal.hpp"
#include "plab/strategies/adapters.hpp"

namespace plab {

// ---- geometry ----------------------------------------------------------------

TreeProduct::TreeProduct(std::vector<Graph> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw ParameterError("tree product needs at least one factor");
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    const Graph& t = trees_[i];
    if (t.vertex_count() < 2) throw ParameterError("factor " + std::to_string(i) + " is a trivial tree");
    if (!t.connected() || t.edge_count() != t.vertex_count() - 1)
      throw ParameterError("factor " + std::to_string(i) + " is not a tree");
    dist_.emplace_back(t);
    sizes_.push_back(t.vertex_count());
  }
  graph_ = std::make_shared<const Graph>(cartesian_product(trees_));
  const int n = graph_->vertex_count();
  const int k = dims();
  coords_.resize(static_cast<std::size_t>(n) * k);
  std::vector<std::vector<int>> colors;
  for (const Graph& t : trees_) colors.push_back(*two_coloring(t));
  side_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex rest = v;
    int parity = 0;
    for (int i = k - 1; i >= 0; --i) {
      const Vertex c = rest % sizes_[i];
      rest /= sizes_[i];
      coords_[static_cast<std::size_t>(v) * k + i] = c;
      parity ^= colors[i][c];
    }
    side_[v] = parity;
  }
}

Vertex TreeProduct::with_coord(Vertex v, int i, Vertex value) const {
  std::vector<Vertex> c(coords_.begin() + static_cast<std::ptrdiff_t>(v) * dims(),
                        coords_.begin() + static_cast<std::ptrdiff_t>(v + 1) * dims());
  c[i] = value;
  return product_vertex(sizes_, c);
}

int TreeProduct::dist(Vertex u, Vertex v) const {
  int d = 0;
  for (int i = 0; i < dims(); ++i) d += tree_dist(i, coord(u, i), coord(v, i));
  return d;
}

Vertex TreeProduct::toward(int i, Vertex from, Vertex to) const {
  const int here = tree_dist(i, from, to);
  for (Vertex w : trees_[i].neighbors(from))
    if (tree_dist(i, w, to) < here) return w;
  throw StrategyError("no step toward the target in coordinate " + std::to_string(i));
}

// ---- tree pair ---------------------------------------------------------------

TreePairCop::TreePairCop(std::shared_ptr<const TreeProduct> product, Vertex start) : p_(std::move(product)), pos_(start) {
  if (p_->dims() != 2) throw ParameterError("tree-pair cop needs exactly two tree factors");
  if (start < 0 || start >= p_->graph().vertex_count()) throw ParameterError("start vertex out of range");
}

int TreePairCop::potential(Vertex robber) const {
  return std::max(p_->tree_dist(0, p_->coord(pos_, 0), p_->coord(robber, 0)),
                  p_->tree_dist(1, p_->coord(pos_, 1), p_->coord(robber, 1)));
}

std::vector<Vertex> TreePairCop::respond(Vertex robber) {
  if (!started_) {
    if (p_->dist(pos_, robber) % 2 == 0) throw ParameterError("tree-pair cop refuses an even starting distance");
    started_ = true;
  }
  const int d0 = p_->tree_dist(0, p_->coord(pos_, 0), p_->coord(robber, 0));
  const int d1 = p_->tree_dist(1, p_->coord(pos_, 1), p_->coord(robber, 1));
  const int i = d0 > d1 ? 0 : 1;
  pos_ = p_->with_coord(pos_, i, p_->toward(i, p_->coord(pos_, i), p_->coord(robber, i)));
  return {pos_};
}

// ---- tree product cops -----------------------------------------------------

std::vector<std::vector<int>> inactive_assignment(int dims, int even_cops, int odd_cops) {
  if (dims < 1 || even_cops < 0 || odd_cops < 0) throw ParameterError("bad assignment parameters");
  const int top = dims - 1;
  std::vector<std::vector<int>> out;
  for (int e = 0; e < even_cops; ++e) out.push_back({std::min(e, top)});
  for (int j = 0; j < odd_cops; ++j) {
    const int a = std::min(even_cops + 2 * j, top);
    const int b = std::min(even_cops + 2 * j + 1, top);
    out.push_back(a == b ? std::vector<int>{a} : std::vector<int>{a, b});
  }
  return out;
}

std::vector<std::pair<int, int>> placement_splits(int cops) {
  const int big = (cops + 1) / 2, small = cops / 2;
  if (big == small) return {{big, small}};
  return {{big, small}, {small, big}};
}

TreeProductCop::TreeProductCop(std::shared_ptr<const TreeProduct> product, int cops) : p_(std::move(product)) {
  const int m = cops > 0 ? cops : tree_product_cops(p_->dims());
  const Vertex v = 0;
  const Vertex w = p_->graph().neighbors(v).front();
  for (int i = 0; i < m; ++i) pos_.push_back(i < (m + 1) / 2 ? v : w);
}

Vertex TreeProductCop::move_one(int cop, Vertex robber) const {
  const TreeProduct& p = *p_;
  const Vertex at = pos_[cop];
  const auto& inactive = inactive_[cop];
  auto step = [&](int i) { return p.with_coord(at, i, p.toward(i, p.coord(at, i), p.coord(robber, i))); };
  auto gap = [&](int i) { return p.tree_dist(i, p.coord(at, i), p.coord(robber, i)); };
  for (int i = 0; i < p.dims(); ++i)
    if (std::find(inactive.begin(), inactive.end(), i) == inactive.end() && gap(i) > 0) return step(i);
  if (inactive.size() == 1) return step(inactive[0]);
  const int a = inactive[0], b = inactive[1];
  return step(gap(a) > gap(b) ? a : b);
}

std::vector<Vertex> TreeProductCop::respond(Vertex robber) {
  const int m = cop_count();
  if (inactive_.empty()) {
    std::vector<int> even, odd;
    for (int i = 0; i < m; ++i) (p_->dist(pos_[i], robber) % 2 == 0 ? even : odd).push_back(i);
    const auto sets = inactive_assignment(p_->dims(), static_cast<int>(even.size()), static_cast<int>(odd.size()));
    inactive_.resize(m);
    for (std::size_t e = 0; e < even.size(); ++e) inactive_[even[e]] = sets[e];
    for (std::size_t j = 0; j < odd.size(); ++j) inactive_[odd[j]] = sets[even.size() + j];
  }
  std::vector<Vertex> next(m);
  for (int i = 0; i < m; ++i) next[i] = move_one(i, robber);
  pos_ = std::move(next);
  return pos_;
}

std::string TreeProductCop::memo_key() const {
  KeyBuilder k;
  k.add(pos_).add(static_cast<std::int64_t>(inactive_.size()));
  for (const auto& s : inactive_) k.add(s);
  return k.str();
}

// ---- tree product robber ---------------------------------------------------

namespace {

// Side holding more cops; ties go to side 0.
int crowded_side(std::span<const Vertex> cops, const std::function<int(Vertex)>& side) {
  int count[2] = {0, 0};
  for (Vertex c : cops) ++count[side(c)];
  return count[1] > count[0] ? 1 : 0;
}

}  // namespace

TreeProductRobber::TreeProductRobber(std::shared_ptr<const TreeProduct> product) : p_(std::move(product)) {}

Vertex TreeProductRobber::place(std::span<const Vertex> cops) {
  const TreeProduct& p = *p_;
  const int y = crowded_side(cops, [&](Vertex v) { return p.side(v); });
  for (Vertex v = 0; v < p.graph().vertex_count(); ++v) {
    if (p.side(v) != y) continue;
    if (std::all_of(cops.begin(), cops.end(), [&](Vertex c) { return p.dist(c, v) >= 2; })) return pos_ = v;
  }
  throw StrategyError("tree-product robber: no safe starting vertex");
}

Vertex TreeProductRobber::respond(std::span<const Vertex> cops) {
  const TreeProduct& p = *p_;
  std::vector<Vertex> near;
  for (Vertex c : cops)
    if (p.dist(c, pos_) <= 2) near.push_back(c);
  for (int i = 0; i < p.dims(); ++i) {
    const bool agree =
        std::all_of(near.begin(), near.end(), [&](Vertex c) { return p.coord(c, i) == p.coord(pos_, i); });
    if (!agree) continue;
    const Vertex next = p.with_coord(pos_, i, p.tree(i).neighbors(p.coord(pos_, i)).front());
    if (!std::all_of(cops.begin(), cops.end(), [&](Vertex c) { return p.dist(c, next) >= 2; }))
      throw StrategyError("tree-product robber: safety condition violated after the move");
    return pos_ = next;
  }
  throw StrategyError("tree-product robber: no coordinate agrees with every nearby cop");
}

// ---- blowup robber -----------------------------------------------------------

BlowupRobber::BlowupRobber(std::shared_ptr<const TreeProduct> base, int t) : base_(std::move(base)), t_(t) {
  const int dims = base_->dims();
  if (dims < 3 || dims % 2 == 0) throw ParameterError("blowup robber needs a product of 2k-1 >= 3 trees");
  k_ = (dims + 1) / 2;
  if (t < 2 * k_)
    throw ParameterError("blowup robber refused: t = " + std::to_string(t) + " < 2k = " + std::to_string(2 * k_));
  blowup_ = std::make_shared<const Graph>(blowup(base_->graph(), t));
}

bool BlowupRobber::safe(Vertex v, std::span<const Vertex> cops) const {
  return std::none_of(cops.begin(), cops.end(), [&](Vertex c) { return c == v || blowup_->adjacent(c, v); });
}

Vertex BlowupRobber::place(std::span<const Vertex> cops) {
  const TreeProduct& b = *base_;
  const int y = crowded_side(cops, [&](Vertex v) { return b.side(v / t_); });
  for (Vertex v = 0; v < blowup_->vertex_count(); ++v)
    if (b.side(v / t_) == y && safe(v, cops)) return pos_ = v;
  throw StrategyError("blowup robber: no safe starting vertex");
}

Vertex BlowupRobber::respond(std::span<const Vertex> cops) {
  const TreeProduct& b = *base_;
  const Vertex shadow = pos_ / t_;
  std::vector<Vertex> near;
  for (Vertex c : cops)
    if (b.dist(c / t_, shadow) == 2) near.push_back(c / t_);
  for (int i = 0; i < b.dims(); ++i) {
    if (!std::all_of(near.begin(), near.end(), [&](Vertex w) { return b.coord(w, i) == b.coord(shadow, i); }))
      continue;
    const Vertex target = b.with_coord(shadow, i, b.tree(i).neighbors(b.coord(shadow, i)).front());
    for (int copy = 0; copy < t_; ++copy) {
      const Vertex v = target * t_ + copy;
      if (std::find(cops.begin(), cops.end(), v) != cops.end()) continue;
      if (!safe(v, cops)) throw StrategyError("blowup robber: safety condition violated after the move");
      return pos_ = v;
    }
    throw StrategyError("blowup robber: every copy of the target is occupied");
  }
  throw StrategyError("blowup robber: no coordinate agrees with every cop at distance 2");
}

BlowupCount blowup_counting_bound(const std::vector<int>& tree_sizes, int t) {
  if (tree_sizes.size() < 3 || tree_sizes.size() % 2 == 0) throw ParameterError("need 2k-1 >= 3 tree sizes");
  std::vector<int> sizes = tree_sizes;
  std::sort(sizes.begin(), sizes.end());
  const long long k = (static_cast<long long>(sizes.size()) + 1) / 2;
  long long prod = t;
  for (std::size_t i = 1; i < sizes.size(); ++i) prod *= sizes[i];
  long long edges = 0;
  for (int s : sizes) edges += s - 1;
  return {prod, (2 * k - 1) + (k - 1) * t * edges};
}

// ---- odd cycle products ----------------------------------------------------

std::unique_ptr<CopStrategy> odd_cycle_product_strategy(const std::vector<int>& cycle_lengths,
                                                        std::shared_ptr<const CoveringMap> map,
                                                        std::shared_ptr<const SolveTable> passive_table,
                                                        SharedSide shared) {
  const auto odd = std::find_if(cycle_lengths.begin(), cycle_lengths.end(), [](int n) { return n % 2 == 1; });
  if (odd == cycle_lengths.end()) throw ParameterError("odd-cycle product strategy needs an odd cycle length");
  const int k = static_cast<int>(cycle_lengths.size());
  if (!map || !passive_table) throw std::invalid_argument("odd-cycle product strategy needs a map and a table");
  if (passive_table->rule() != kPassive || passive_table->cops() != k + 1 || !(passive_table->graph() == map->source))
    throw ParameterError("table must be the passive (k+1)-cop table of the doubled product");

  std::shared_ptr<const Graph> h(map, &map->source);
  auto side = std::make_shared<const std::vector<int>>(*two_coloring(map->source));
  std::vector<int> doubled;
  for (int n : cycle_lengths) doubled.push_back(2 * n);
  std::vector<Vertex> shifted(k, 0);
  shifted[odd - cycle_lengths.begin()] = *odd;
  const Vertex alt_start = product_vertex(doubled, shifted);

  auto factory = [h, side, alt_start, passive_table, k, shared](Vertex robber_start) -> std::unique_ptr<CopStrategy> {
    const bool origin_shares = (*side)[robber_start] == (*side)[0];
    const bool want_shared = shared == SharedSide::CopTurn;
    const Vertex start = origin_shares == want_shared ? 0 : alt_start;
    auto passive = std::make_unique<OptimalCop>(passive_table, std::vector<Vertex>(k + 1, start));
    return std::make_unique<SamePartiteAdapter>(h, std::move(passive), shared);
  };
  return std::make_unique<CoverLiftAdapter>(map, std::vector<Vertex>(k + 1, 0), factory, kFullyActive,
                                            "odd-cycle-product");
}

}  // namespace plab
