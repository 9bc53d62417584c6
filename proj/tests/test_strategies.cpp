#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "plab/arena.hpp"
#include "plab/optimal.hpp"
#include "plab/strategies/adapters.hpp"
#include "plab/strategies/products.hpp"
#include "plab/strategies/random_robber.hpp"

using namespace plab;
using plab::testing::all_placements;
using plab::testing::path_factors;
using plab::testing::table_for;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

CopFactory doubling_of(std::shared_ptr<const Graph> g, int k) {
  auto t = table_for(*g, k, kPassive);
  return [g, t] { return std::make_unique<DoublingAdapter>(g, std::make_unique<OptimalCop>(t)); };
}

CopFactory shadow_of(std::shared_ptr<const Graph> g, int t_cops) {
  auto t = table_for(*g, t_cops, kFullyActive);
  return [g, t] { return std::make_unique<ShadowPassiveAdapter>(g, std::make_unique<OptimalCop>(t)); };
}

std::shared_ptr<const TreeProduct> tree_product(std::vector<Graph> trees) {
  return std::make_shared<const TreeProduct>(std::move(trees));
}

}  // namespace

TEST_CASE("doubling adapter: passive strategy lifted to twice as many fully active cops") {
  for (auto [g, k] : {std::pair{share(path_graph(4)), 1}, std::pair{share(cycle_graph(5)), 2},
                      std::pair{share(petersen_graph()), 3}}) {
    const auto r = exhaustive_verify_cop(*g, kFullyActive, doubling_of(g, k));
    INFO(r.message);
    CHECK(r.verified);
  }
}

TEST_CASE("doubling adapter keeps every imagined vertex covered") {
  auto g = share(cycle_graph(7));
  auto t = table_for(*g, 2, kPassive);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DoublingAdapter cops(g, std::make_unique<OptimalCop>(t));
    RandomRobber robber(g, kFullyActive, seed);
    auto placed = cops.place();
    robber.place(placed);
    Vertex y = robber.place(placed);
    for (int round = 0; round < 30; ++round) {
      const auto real = cops.respond(y);
      for (Vertex v : cops.imagined()) CHECK(std::find(real.begin(), real.end(), v) != real.end());
      if (std::find(real.begin(), real.end(), y) != real.end()) break;
      std::vector<Vertex> sorted = real;
      std::sort(sorted.begin(), sorted.end());
      y = robber.respond(sorted);
      if (std::find(real.begin(), real.end(), y) != real.end()) break;
    }
  }
}

TEST_CASE("doubling adapter: C5 game against the optimal robber ends in capture") {
  auto g = share(cycle_graph(5));
  auto t = table_for(*g, 2, kPassive);
  DoublingAdapter cops(g, std::make_unique<OptimalCop>(t));
  // The robber plays the 4-cop fully active table, so it dodges as long as possible.
  auto rt = table_for(*g, 4, kFullyActive);
  OptimalRobber robber(rt);
  const Transcript tr = play(*g, kFullyActive, cops, robber, 200);
  CHECK(tr.outcome == Outcome::Capture);
}

TEST_CASE("doubling adapter rejects an illegal passive move") {
  class Jumper : public CopStrategy {
   public:
    std::string name() const override { return "jumper"; }
    int cop_count() const override { return 1; }
    MovementRule rule() const override { return kPassive; }
    std::vector<Vertex> place() override { return {0}; }
    std::vector<Vertex> respond(Vertex) override { return {3}; }
    std::string memo_key() const override { return {}; }
    std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<Jumper>(*this); }
  };
  auto g = share(path_graph(5));
  DoublingAdapter d(g, std::make_unique<Jumper>());
  d.place();
  CHECK_THROWS_AS(d.respond(4), StrategyError);
}

TEST_CASE("shadow-passive adapter") {
  SUBCASE("vab(2,2): one fully active cop becomes two passive cops") {
    auto g = share(vab_graph(2, 2));
    REQUIRE(table_for(*g, 1, kFullyActive)->first_winning_placement().has_value());
    CHECK_FALSE(table_for(*g, 1, kPassive)->first_winning_placement().has_value());
    CHECK(exhaustive_verify_cop(*g, kPassive, shadow_of(g, 1)).verified);
  }
  SUBCASE("C4: two active cops become three passive cops") {
    auto g = share(cycle_graph(4));
    CHECK(exhaustive_verify_cop(*g, kPassive, shadow_of(g, 2)).verified);
  }
  SUBCASE("K2") {
    auto g = share(complete_graph(2));
    auto f = shadow_of(g, 1);
    CHECK(f()->cop_count() == 2);
    CHECK(exhaustive_verify_cop(*g, kPassive, f).verified);
  }
}

namespace {

VerifyResult verify_same_partite(std::shared_ptr<const Graph> g, std::shared_ptr<const SolveTable> t,
                                 const std::vector<Vertex>& p, SharedSide shared, std::vector<Vertex> starts) {
  VerifyCopOptions o;
  o.robber_starts = std::move(starts);
  return exhaustive_verify_cop(
      *g, kFullyActive,
      [&] { return std::make_unique<SamePartiteAdapter>(g, std::make_unique<OptimalCop>(t, p), shared); }, o);
}

// Placements with every cop on one side, paired with the robber starts that
// the given reading allows.
std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> partite_starts(const Graph& g, int k,
                                                                                SharedSide shared) {
  const auto side = *two_coloring(g);
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
  for (const auto& p : all_placements(g.vertex_count(), k)) {
    const int s = side[p[0]];
    if (!std::all_of(p.begin(), p.end(), [&](Vertex v) { return side[v] == s; })) continue;
    const int want = shared == SharedSide::CopTurn ? s : 1 - s;
    std::vector<Vertex> ys;
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      if (side[y] == want) ys.push_back(y);
    out.emplace_back(p, ys);
  }
  return out;
}

}  // namespace

TEST_CASE("same-partite adapter, cops and robber on one side") {
  SUBCASE("C4 and C6") {
    for (const Graph& base : {cycle_graph(4), cycle_graph(6)}) {
      auto g = share(base);
      auto t = table_for(*g, 2, kPassive);
      for (const auto& [p, ys] : partite_starts(*g, 2, SharedSide::CopTurn)) {
        const auto r = verify_same_partite(g, t, p, SharedSide::CopTurn, ys);
        INFO("n=", g->vertex_count(), " placement=", p[0], ",", p[1], " : ", r.message);
        CHECK(r.verified);
      }
    }
  }
  SUBCASE("Q3: the robber escapes exactly where the solver says it does") {
    auto g = share(hypercube_graph(3));
    REQUIRE(cop_number(*g, kPassive, 3) == 2);
    auto passive = table_for(*g, 2, kPassive);
    const SolveTable active = solve(*g, 2, kFullyActive);
    int configs = 0, losing = 0;
    for (const auto& [p, ys] : partite_starts(*g, 2, SharedSide::CopTurn)) {
      for (Vertex y : ys) {
        ++configs;
        const bool win = active.cops_win_initial(p, y);
        losing += win ? 0 : 1;
        const auto r = verify_same_partite(g, passive, p, SharedSide::CopTurn, {y});
        INFO("placement=", p[0], ",", p[1], " robber=", y, " : ", r.message);
        if (!win) CHECK_FALSE(r.verified);
      }
    }
    CHECK(configs == 80);
    CHECK(losing == 48);
  }
}

TEST_CASE("same-partite adapter, cops opposite the robber") {
  for (const Graph& base : {cycle_graph(4), cycle_graph(6), hypercube_graph(3)}) {
    auto g = share(base);
    auto t = table_for(*g, 2, kPassive);
    const SolveTable active = solve(*g, 2, kFullyActive);
    for (const auto& [p, ys] : partite_starts(*g, 2, SharedSide::RobberTurn)) {
      for (Vertex y : ys) CHECK(active.cops_win_initial(p, y));
      const auto r = verify_same_partite(g, t, p, SharedSide::RobberTurn, ys);
      INFO("n=", g->vertex_count(), " placement=", p[0], ",", p[1], " : ", r.message);
      CHECK(r.verified);
    }
  }
}

TEST_CASE("same-partite adapter refuses mixed sides and non-bipartite graphs") {
  auto g = share(cycle_graph(4));
  auto t = table_for(*g, 2, kPassive);
  SamePartiteAdapter a(g, std::make_unique<OptimalCop>(t, std::vector<Vertex>{0, 2}));
  a.place();
  CHECK_THROWS_AS(a.respond(1), ParameterError);
  auto odd = share(cycle_graph(5));
  CHECK_THROWS_AS(SamePartiteAdapter(odd, std::make_unique<OptimalCop>(table_for(*odd, 2, kPassive))),
                  ParameterError);
}

TEST_CASE("cover-lift adapter") {
  SUBCASE("identity cover reproduces the wrapped controller") {
    const Graph g = petersen_graph();
    auto t = table_for(g, 3, kPassive);
    auto map = std::make_shared<const CoveringMap>(identity_cover(g));
    const auto placement = best_placement(*t);
    CoverLiftAdapter lifted(map, placement, [&](Vertex) { return std::make_unique<OptimalCop>(t, placement); },
                            kPassive);
    OptimalCop direct(t, placement);
    OptimalRobber r1(t), r2(t);
    const Transcript a = play(g, kPassive, lifted, r1, 50);
    const Transcript b = play(g, kPassive, direct, r2, 50);
    CHECK(a.outcome == b.outcome);
    CHECK(a.outcome_round == b.outcome_round);
    REQUIRE(a.rounds.size() == b.rounds.size());
    for (std::size_t i = 0; i < a.rounds.size(); ++i) {
      CHECK(a.rounds[i].cops == b.rounds[i].cops);
      CHECK(a.rounds[i].robber == b.rounds[i].robber);
    }
  }
  SUBCASE("C6 onto C3 with two cops") {
    auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover({3}));
    CHECK_FALSE(validate_covering(*map).has_value());
    auto t = table_for(map->source, 2, kFullyActive);
    const auto src = best_placement(*t);
    std::vector<Vertex> real;
    for (Vertex v : src) real.push_back(map->image[v]);
    const auto r = exhaustive_verify_cop(map->target, kFullyActive, [&] {
      return std::make_unique<CoverLiftAdapter>(map, real,
                                                [&](Vertex) { return std::make_unique<OptimalCop>(t, src); },
                                                kFullyActive);
    });
    INFO(r.message);
    CHECK(r.verified);
  }
  SUBCASE("invariant: images of imagined positions match the real game") {
    auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover({5}));
    auto t = table_for(map->source, 2, kFullyActive);
    const auto src = best_placement(*t);
    std::vector<Vertex> real;
    for (Vertex v : src) real.push_back(map->image[v]);
    CoverLiftAdapter cops(map, real, [&](Vertex) { return std::make_unique<OptimalCop>(t, src); }, kFullyActive);
    auto tg = std::make_shared<const Graph>(map->target);
    RandomRobber robber(tg, kFullyActive, 7);
    auto pos = cops.place();
    Vertex y = robber.place(pos);
    for (int round = 0; round < 40; ++round) {
      pos = cops.respond(y);
      CHECK(map->image[cops.imagined_robber()] == y);
      for (std::size_t i = 0; i < pos.size(); ++i) CHECK(map->image[cops.imagined_cops()[i]] == pos[i]);
      if (std::find(pos.begin(), pos.end(), y) != pos.end()) break;
      y = robber.respond(pos);
      if (std::find(pos.begin(), pos.end(), y) != pos.end()) break;
    }
  }
}

TEST_CASE("odd cycle products") {
  SUBCASE("C5 with two cops") {
    auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover({5}));
    auto t = table_for(map->source, 2, kPassive);
    const auto r = exhaustive_verify_cop(map->target, kFullyActive,
                                         [&] { return odd_cycle_product_strategy({5}, map, t); });
    INFO(r.message);
    CHECK(r.verified);
    CHECK(cop_number(map->target, kFullyActive, 3) == 2);
  }
  SUBCASE("C3 x C3 and C3 x C4 with three cops") {
    for (const std::vector<int>& lengths : {std::vector<int>{3, 3}, std::vector<int>{3, 4}}) {
      auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover(lengths));
      auto t = table_for(map->source, 3, kPassive);
      const auto r = exhaustive_verify_cop(map->target, kFullyActive,
                                           [&] { return odd_cycle_product_strategy(lengths, map, t); });
      INFO(lengths[0], "x", lengths[1], " : ", r.message);
      CHECK(r.verified);
      const auto literal = exhaustive_verify_cop(
          map->target, kFullyActive, [&] { return odd_cycle_product_strategy(lengths, map, t, SharedSide::CopTurn); });
      CHECK_FALSE(literal.verified);
      CHECK(literal.message.find("parity") != std::string::npos);
    }
  }
  SUBCASE("all-even lengths are refused") {
    auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover({4}));
    auto t = table_for(map->source, 2, kPassive);
    CHECK_THROWS_AS(odd_cycle_product_strategy({4}, map, t), ParameterError);
  }
}

TEST_CASE("tree-pair cop") {
  SUBCASE("K2 x K2 from distance one captures on the first move") {
    auto p = tree_product({path_graph(2), path_graph(2)});
    TreePairCop c(p, 0);
    c.place();
    const auto next = c.respond(1);
    CHECK(next[0] == 1);
  }
  SUBCASE("P3 x P3 from every odd-distance start") {
    auto p = tree_product(path_factors({3, 3}));
    for (Vertex s = 0; s < p->graph().vertex_count(); ++s) {
      VerifyCopOptions o;
      o.robber_starts.emplace();
      for (Vertex y = 0; y < p->graph().vertex_count(); ++y)
        if (p->dist(s, y) % 2 == 1) o.robber_starts->push_back(y);
      const auto r =
          exhaustive_verify_cop(p->graph(), kFullyActive, [&] { return std::make_unique<TreePairCop>(p, s); }, o);
      CHECK(r.verified);
    }
  }
  SUBCASE("even starting distance is refused") {
    auto p = tree_product(path_factors({3, 3}));
    TreePairCop c(p, 0);
    c.place();
    CHECK_THROWS_AS(c.respond(2), ParameterError);
  }
  SUBCASE("P4 x P3: the potential never rises and falls within diam + diam rounds") {
    auto p = tree_product(path_factors({4, 3}));
    const Graph& g = p->graph();
    const int window = 3 + 2;
    // Every robber behavior up to a depth that covers several windows.
    struct Frame {
      TreePairCop cop;
      Vertex robber;
      int potential;
      int stale;
    };
    int checked = 0;
    auto rec = [&](auto&& self, const Frame& f, int depth) -> void {
      if (depth == 12) return;
      TreePairCop c = f.cop;
      const Vertex pos = c.respond(f.robber)[0];
      if (pos == f.robber) return;
      for (Vertex m : g.neighbors(f.robber)) {
        if (m == pos) continue;
        const int pot = c.potential(m);
        CHECK(pot <= f.potential);
        const int stale = pot < f.potential ? 0 : f.stale + 1;
        CHECK(stale < window);
        ++checked;
        self(self, Frame{c, m, pot, stale}, depth + 1);
      }
    };
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      if (p->dist(0, y) % 2 == 0) continue;
      TreePairCop c(p, 0);
      c.place();
      rec(rec, Frame{c, y, c.potential(y), 0}, 0);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("tree-product cop") {
  SUBCASE("P3 x P3 with two cops") {
    auto p = tree_product(path_factors({3, 3}));
    CHECK(exhaustive_verify_cop(p->graph(), kFullyActive, [&] { return std::make_unique<TreeProductCop>(p); })
              .verified);
  }
  SUBCASE("Q3 with two cops, and not with one") {
    auto p = tree_product(path_factors({2, 2, 2}));
    CHECK(p->graph() == hypercube_graph(3));
    CHECK(exhaustive_verify_cop(p->graph(), kFullyActive, [&] { return std::make_unique<TreeProductCop>(p); })
              .verified);
    const auto one =
        exhaustive_verify_cop(p->graph(), kFullyActive, [&] { return std::make_unique<TreeProductCop>(p, 1); });
    CHECK_FALSE(one.verified);
    CHECK(one.counterexample.has_value());
  }
  SUBCASE("trivial factors are refused") {
    CHECK_THROWS_AS(TreeProduct({path_graph(3), path_graph(1)}), ParameterError);
    CHECK_THROWS_AS(TreeProduct({cycle_graph(3)}), ParameterError);
  }
}

TEST_CASE("inactive assignment covers every coordinate on placement splits") {
  for (int k = 2; k <= 5; ++k) {
    const int m = tree_product_cops(k);
    for (auto [c, d] : placement_splits(m)) {
      INFO("k=", k, " c=", c, " d=", d);
      CHECK(c + 2 * d >= k);
      const auto sets = inactive_assignment(k, c, d);
      std::vector<bool> covered(k, false);
      for (const auto& s : sets)
        for (int i : s) covered[i] = true;
      CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    }
  }
  // Round-down: indices past the last coordinate collapse onto it.
  const auto sets = inactive_assignment(2, 1, 1);
  CHECK(sets[0] == std::vector<int>{0});
  CHECK(sets[1] == std::vector<int>{1});
}

TEST_CASE("tree-product robber") {
  auto p33 = tree_product(path_factors({3, 3}));
  auto f33 = [&] { return std::make_unique<TreeProductRobber>(p33); };
  CHECK(exhaustive_verify_robber(p33->graph(), kFullyActive, 1, f33).verified);
  const auto two = exhaustive_verify_robber(p33->graph(), kFullyActive, 2, f33);
  CHECK_FALSE(two.verified);
  REQUIRE(two.counterexample.has_value());

  auto q3 = tree_product(path_factors({2, 2, 2}));
  CHECK(exhaustive_verify_robber(q3->graph(), kFullyActive, 1,
                                 [&] { return std::make_unique<TreeProductRobber>(q3); })
            .verified);
}

TEST_CASE("robber inequality: 2c + d < k whenever c <= d and c + d = ceil(2k/3) - 1") {
  for (int k = 2; k <= 12; ++k) {
    const int total = tree_product_cops(k) - 1;
    for (int c = 0; 2 * c <= total; ++c) CHECK(2 * c + (total - c) < k);
  }
}

TEST_CASE("blowup robber") {
  auto base = tree_product(path_factors({2, 2, 2}));
  SUBCASE("t < 2k is refused") { CHECK_THROWS_AS(BlowupRobber(base, 3), ParameterError); }
  SUBCASE("a safe start exists against every three-cop placement") {
    BlowupRobber proto(base, 4);
    const Graph& g = proto.graph();
    CHECK(g.vertex_count() == 32);
    for (const auto& p : all_placements(32, 3)) {
      BlowupRobber r(base, 4);
      const Vertex y = r.place(p);
      CHECK(std::find(p.begin(), p.end(), y) == p.end());
      CHECK(std::none_of(p.begin(), p.end(), [&](Vertex c) { return g.adjacent(c, y); }));
    }
  }
  SUBCASE("counting bound on the k = 2 instance") {
    const auto b = blowup_counting_bound({2, 2, 2}, 4);
    CHECK(b.y_lower == 16);
    CHECK(b.covered_upper == 15);
    CHECK(b.y_lower > b.covered_upper);
  }
}
