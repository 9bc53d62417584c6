#include "plab/suite.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "plab/arena.hpp"
#include "plab/catalog.hpp"
#include "plab/covering.hpp"
#include "plab/generators.hpp"
#include "plab/multiset.hpp"
#include "plab/optimal.hpp"
#include "plab/oracle/joint_solver.hpp"
#include "plab/strategies/adapters.hpp"
#include "plab/strategies/outerplanar_cop.hpp"
#include "plab/strategies/products.hpp"

#ifndef PLAB_VERSION
#define PLAB_VERSION "0.0.0"
#endif

namespace plab {

std::string plab_version() { return PLAB_VERSION; }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

int SuiteReport::count(Verdict v) const {
  int n = 0;
  for (const auto& r : records) n += r.verdict == v ? 1 : 0;
  return n;
}

Verdict SuiteReport::criterion_verdict(int criterion) const {
  bool ran = false;
  for (const auto& r : records) {
    if (r.criterion != criterion) continue;
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
    ran = ran || r.verdict == Verdict::Pass;
  }
  return ran ? Verdict::Pass : Verdict::Skipped;
}

namespace {

using Clock = std::chrono::steady_clock;
using SharedGraph = std::shared_ptr<const Graph>;

SharedGraph share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string fraction(int got, int of) { return std::to_string(got) + "/" + std::to_string(of); }

std::string number_or_unknown(const std::optional<int>& v, int k_max) {
  return v ? std::to_string(*v) : ">" + std::to_string(k_max);
}

template <typename F>
void for_each_placement(int n, int k, F&& visit) {
  const MultisetIndexer ms(n, k);
  for (std::uint64_t r = 0; r < ms.count(k); ++r) {
    const auto p = ms.unrank(k, r);
    visit(std::vector<Vertex>(p.begin(), p.end()));
  }
}

class Suite {
 public:
  explicit Suite(const SuiteConfig& config) : cfg_(config) { ctx_.cache = config.cache; }

  SuiteReport run() {
    report_.seed = cfg_.seed;
    report_.version = plab_version();
    report_.heavy = cfg_.heavy;
    using Check = void (Suite::*)();
    const Check checks[kCriteria] = {&Suite::simple_classes, &Suite::cop_win,      &Suite::vab,
                                     &Suite::outerplanar,    &Suite::sandwich,     &Suite::blowup_theorem,
                                     &Suite::hypercubes,     &Suite::tree_products, &Suite::same_partite,
                                     &Suite::covering,       &Suite::odd_cycles,   &Suite::even_cycles,
                                     &Suite::product_hypothesis, &Suite::oracle_equivalence};
    for (int c = 1; c <= kCriteria; ++c) {
      if (!cfg_.only.empty() && std::find(cfg_.only.begin(), cfg_.only.end(), c) == cfg_.only.end()) continue;
      criterion_ = c;
      letter_ = 'a';
      try {
        (this->*checks[c - 1])();
      } catch (const std::exception& e) {
        CheckRecord r = start("error", "");
        r.expected = "no error";
        r.computed = "error";
        r.note = e.what();
        finish(std::move(r), false);
      }
    }
    return std::move(report_);
  }

 private:
  // Seeds are spread per criterion so that adding instances to one check
  // leaves the others unchanged.
  std::uint64_t seed_for(int index) const {
    return cfg_.seed * 1000003ull + static_cast<std::uint64_t>(criterion_) * 10007ull + static_cast<std::uint64_t>(index);
  }

  CheckRecord start(std::string anchor, std::string instance) {
    CheckRecord r;
    r.criterion = criterion_;
    r.id = std::to_string(criterion_) + letter_++;
    r.anchor = std::move(anchor);
    r.instance = std::move(instance);
    started_ = Clock::now();
    return r;
  }

  void finish(CheckRecord r, bool pass) {
    r.verdict = pass ? Verdict::Pass : Verdict::Fail;
    r.seconds = std::chrono::duration<double>(Clock::now() - started_).count();
    if (cfg_.progress) cfg_.progress(r);
    report_.records.push_back(std::move(r));
  }

  void skip(CheckRecord r, std::string why) {
    r.verdict = Verdict::Skipped;
    r.note = std::move(why);
    if (cfg_.progress) cfg_.progress(r);
    report_.records.push_back(std::move(r));
  }

  void expect_equal(CheckRecord r, const std::string& expected, const std::string& computed) {
    r.expected = expected;
    r.computed = computed;
    finish(std::move(r), expected == computed);
  }

  std::optional<int> cop(const Graph& g, int k_max = 4) { return cop_number(g, kPassive, k_max, ctx_.cache); }
  std::optional<int> acop(const Graph& g, int k_max = 4) { return cop_number(g, kFullyActive, k_max, ctx_.cache); }
  std::shared_ptr<const SolveTable> table(SharedGraph g, int k, MovementRule rule) {
    return table_from(ctx_, std::move(g), k, rule);
  }

  // ---- 1 ----------------------------------------------------------------------
  void simple_classes() {
    {
      auto r = start("trees: cop = acop = 1", "20 random trees, n = 2..10, seeds " + std::to_string(seed_for(0)) +
                                                   ".." + std::to_string(seed_for(19)));
      int good = 0;
      std::vector<int> bad;
      for (int i = 0; i < 20; ++i) {
        const Graph t = random_tree(2 + i % 9, seed_for(i));
        if (cop(t) == 1 && acop(t) == 1) ++good;
        else bad.push_back(i);
      }
      if (!bad.empty()) r.note = "failing instances: " + join(bad);
      expect_equal(std::move(r), "20", std::to_string(good));
    }
    {
      auto r = start("cycles: cop = acop = 2", "C_n, n = 4..10");
      std::vector<int> got;
      for (int n = 4; n <= 10; ++n) {
        const Graph c = cycle_graph(n);
        got.push_back(cop(c) == 2 && acop(c) == 2 ? 2 : -1);
      }
      expect_equal(std::move(r), join(std::vector<int>(7, 2)), join(got));
    }
    {
      auto r = start("the triangle is the exception among cycles", "C_3 (cop, acop)");
      const Graph c = cycle_graph(3);
      expect_equal(std::move(r), "1,1", number_or_unknown(cop(c), 4) + "," + number_or_unknown(acop(c), 4));
    }
    {
      auto r = start("complete graphs: cop = acop = 1", "K_n, n = 2..6");
      std::vector<int> got;
      for (int n = 2; n <= 6; ++n) {
        const Graph k = complete_graph(n);
        got.push_back(cop(k) == 1 && acop(k) == 1 ? 1 : -1);
      }
      expect_equal(std::move(r), "1,1,1,1,1", join(got));
    }
    {
      auto r = start("complete bipartite graphs: cop = acop = 2", "K_{m,n}, 2 <= m, n <= 4");
      std::vector<int> got;
      for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
          const Graph k = complete_bipartite_graph(m, n);
          got.push_back(cop(k) == 2 && acop(k) == 2 ? 2 : -1);
        }
      expect_equal(std::move(r), join(std::vector<int>(9, 2)), join(got));
    }
  }

  // ---- 2 ----------------------------------------------------------------------
  void cop_win() {
    auto r = start("cop-win graphs stay cop-win with fully active cops",
                   "100 random connected graphs, n = 2..7, p = 0.4, seeds " + std::to_string(seed_for(0)) + ".." +
                       std::to_string(seed_for(99)));
    int cop_win = 0, active_win = 0;
    for (int i = 0; i < 100; ++i) {
      const Graph g = random_connected(2 + i % 6, 0.4, seed_for(i));
      if (cop(g, 1) != 1) continue;
      ++cop_win;
      if (acop(g, 1) == 1) ++active_win;
    }
    r.note = std::to_string(cop_win) + " of 100 instances are cop-win";
    expect_equal(std::move(r), std::to_string(cop_win), std::to_string(active_win));
  }

  // ---- 3 ----------------------------------------------------------------------
  void vab() {
    auto r = start("vAB gadget: cop = 2, acop = 1", "vab(a, b), a, b in {2, 3}; pairs (cop, acop)");
    std::string got;
    for (int a = 2; a <= 3; ++a)
      for (int b = 2; b <= 3; ++b) {
        const Graph g = vab_graph(a, b);
        got += (got.empty() ? "" : " ") + number_or_unknown(cop(g), 4) + "," + number_or_unknown(acop(g), 4);
      }
    expect_equal(std::move(r), "2,1 2,1 2,1 2,1", got);
  }

  // ---- 4 ----------------------------------------------------------------------
  void outerplanar() {
    auto r = start("outerplanar graphs: acop <= 2",
                   "50 random maximal outerplanar graphs, n = 3..12, seeds " + std::to_string(seed_for(0)) + ".." +
                       std::to_string(seed_for(49)) + "; solver and explicit strategy (bound 20 n^2)");
    int solver_ok = 0, strategy_ok = 0;
    std::vector<int> bad;
    for (int i = 0; i < 50; ++i) {
      const int n = 3 + i % 10;
      auto [graph, emb] = random_maximal_outerplanar(n, seed_for(i));
      auto g = share(std::move(graph));
      const bool solver = acop(*g, 2).has_value();
      VerifyCopOptions o;
      o.round_bound = 20 * n * n;
      const auto v = exhaustive_verify_cop(*g, kFullyActive,
                                           [&] { return std::make_unique<OuterplanarCop>(g, emb); }, o);
      solver_ok += solver ? 1 : 0;
      strategy_ok += v.verified ? 1 : 0;
      if (!solver || !v.verified) bad.push_back(i);
    }
    if (!bad.empty()) r.note = "failing instances: " + join(bad);
    expect_equal(std::move(r), "solver 50, strategy 50",
                 "solver " + std::to_string(solver_ok) + ", strategy " + std::to_string(strategy_ok));
  }

  // ---- 5 ----------------------------------------------------------------------
  void sandwich() {
    auto r = start("cop - 1 <= acop <= 2 cop", "100 random connected graphs, n = 2..7, p = 0.4, seeds " +
                                                   std::to_string(seed_for(0)) + ".." + std::to_string(seed_for(99)));
    int within = 0;
    std::vector<int> bad;
    std::vector<std::pair<Graph, std::pair<int, int>>> first;
    for (int i = 0; i < 100; ++i) {
      Graph g = random_connected(2 + i % 6, 0.4, seed_for(i));
      const auto c = cop(g, 4);
      const auto a = c ? acop(g, std::min(2 * *c, kMaxCops)) : std::nullopt;
      if (c && a && *c - 1 <= *a && *a <= 2 * *c) ++within;
      else bad.push_back(i);
      if (c && a && first.size() < 10 && g.vertex_count() >= 4) first.push_back({std::move(g), {*c, *a}});
    }
    if (!bad.empty()) r.note = "failing instances: " + join(bad);
    expect_equal(std::move(r), "100", std::to_string(within));

    auto r2 = start("doubling (2 cop fully active cops) and shadow (acop + 1 passive cops) strategies capture",
                    "the first 10 instances above with n >= 4");
    int doubling = 0, shadow = 0;
    for (auto& [graph, ca] : first) {
      auto g = share(graph);
      auto passive = table(g, ca.first, kPassive);
      auto active = table(g, ca.second, kFullyActive);
      doubling += exhaustive_verify_cop(*g, kFullyActive, [&] {
                    return std::make_unique<DoublingAdapter>(g, std::make_unique<OptimalCop>(passive));
                  }).verified;
      shadow += exhaustive_verify_cop(*g, kPassive, [&] {
                  return std::make_unique<ShadowPassiveAdapter>(g, std::make_unique<OptimalCop>(active));
                }).verified;
    }
    const int n = static_cast<int>(first.size());
    expect_equal(std::move(r2), "doubling " + fraction(n, n) + ", shadow " + fraction(n, n),
                 "doubling " + fraction(doubling, n) + ", shadow " + fraction(shadow, n));
  }

  // ---- 6 ----------------------------------------------------------------------
  void blowup_theorem() {
    const std::string instance = "4-blowup of Q_3 (32 vertices)";
    if (!cfg_.heavy) {
      skip(start("blowup with t >= 2k: acop = 2k", instance), "heavy check; run with --heavy");
      return;
    }
    const auto base = std::make_shared<const TreeProduct>(std::vector<Graph>(3, path_graph(2)));
    BlowupRobber probe(base, 4);
    auto g = probe.graph_ptr();
    {
      auto r = start("the blowup keeps the passive cop number", instance + ", passive cop number");
      expect_equal(std::move(r), "2", number_or_unknown(cop(*g, 3), 3));
    }
    bool three_lose = false;
    {
      auto r = start("3 fully active cops lose", instance + "; solver and explicit robber");
      const auto t = table(g, 3, kFullyActive);
      const bool solver_loses = !t->first_winning_placement().has_value();
      const auto v = exhaustive_verify_robber(*g, kFullyActive, 3,
                                              [&] { return std::make_unique<BlowupRobber>(base, 4); });
      r.note = v.message;
      three_lose = solver_loses && v.verified;
      expect_equal(std::move(r), "solver loses, robber verified",
                   std::string(solver_loses ? "solver loses" : "solver wins") + ", robber " +
                       (v.verified ? "verified" : "captured"));
    }
    {
      auto r = start("4 fully active cops win by doubling 2 passive cops; so acop = 4", instance);
      const auto passive = table(g, 2, kPassive);
      const auto v = exhaustive_verify_cop(*g, kFullyActive, [&] {
        return std::make_unique<DoublingAdapter>(g, std::make_unique<OptimalCop>(passive));
      });
      r.note = v.message;
      expect_equal(std::move(r), "4", three_lose && v.verified ? "4" : "undetermined");
    }
  }

  // ---- 7 ----------------------------------------------------------------------
  void hypercubes() {
    auto r = start("acop(Q_n) = ceil(2n/3)", "Q_n, n = 1..4");
    std::vector<int> want, got;
    for (int n = 1; n <= 4; ++n) {
      want.push_back((2 * n + 2) / 3);
      const auto a = acop(hypercube_graph(n), 4);
      got.push_back(a.value_or(-1));
    }
    expect_equal(std::move(r), join(want), join(got));
  }

  // ---- 8 ----------------------------------------------------------------------
  void tree_products() {
    const std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"P3 x P3", {3, 3}}, {"P3 x P4", {3, 4}}, {"K2 x K2 x P3", {2, 2, 3}}};
    for (const auto& [label, sizes] : cases) {
      auto r = start("product of k trees: acop = ceil(2k/3)", label + "; solver, cop strategy, robber strategy");
      std::vector<Graph> trees;
      for (int s : sizes) trees.push_back(path_graph(s));
      auto product = std::make_shared<const TreeProduct>(trees);
      const Graph& g = product->graph();
      const int m = tree_product_cops(static_cast<int>(sizes.size()));
      const auto a = acop(g, m + 1);
      const auto cop_v = exhaustive_verify_cop(g, kFullyActive, [&] { return std::make_unique<TreeProductCop>(product); });
      const auto rob_v = exhaustive_verify_robber(g, kFullyActive, m - 1,
                                                  [&] { return std::make_unique<TreeProductRobber>(product); });
      expect_equal(std::move(r),
                   "acop " + std::to_string(m) + ", cops verified with " + std::to_string(m) +
                       ", robber verified against " + std::to_string(m - 1),
                   "acop " + number_or_unknown(a, m + 1) + ", cops " + (cop_v.verified ? "verified" : "refuted") +
                       " with " + std::to_string(m) + ", robber " + (rob_v.verified ? "verified" : "captured") +
                       " against " + std::to_string(m - 1));
    }
  }

  // ---- 9 ----------------------------------------------------------------------
  struct PartiteCount {
    int verified = 0;
    int total = 0;
    int solver_losses = 0;
  };

  PartiteCount partite_configs(const Graph& base, SharedSide shared) {
    auto g = share(base);
    const int k = cop(*g).value_or(1);
    const auto passive = table(g, k, kPassive);
    const auto active = table(g, k, kFullyActive);
    const auto side = *two_coloring(*g);
    PartiteCount out;
    for_each_placement(g->vertex_count(), k, [&](const std::vector<Vertex>& p) {
      const int s = side[p[0]];
      for (Vertex c : p)
        if (side[c] != s) return;
      const int want = shared == SharedSide::CopTurn ? s : 1 - s;
      for (Vertex y = 0; y < g->vertex_count(); ++y) {
        if (side[y] != want) continue;
        ++out.total;
        out.solver_losses += active->cops_win_initial(p, y) ? 0 : 1;
        VerifyCopOptions o;
        o.robber_starts = std::vector<Vertex>{y};
        const auto v = exhaustive_verify_cop(*g, kFullyActive, [&] {
          return std::make_unique<SamePartiteAdapter>(g, std::make_unique<OptimalCop>(passive, p), shared);
        }, o);
        out.verified += v.verified ? 1 : 0;
      }
    });
    return out;
  }

  void same_partite() {
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"C4", cycle_graph(4)}, {"C6", cycle_graph(6)}, {"Q3", hypercube_graph(3)}};
    for (SharedSide shared : {SharedSide::CopTurn, SharedSide::RobberTurn}) {
      const bool literal = shared == SharedSide::CopTurn;
      auto r = start(literal ? "cop(G) fully active cops win from the robber's partite set, cops to move"
                             : "cop(G) fully active cops win from the side opposite the robber, cops to move",
                     "C4, C6, Q3 with cop(G) cops; verified configurations per graph");
      std::string want, got, losses;
      for (const auto& [label, g] : graphs) {
        const auto c = partite_configs(g, shared);
        want += (want.empty() ? "" : " ") + label + " " + fraction(c.total, c.total);
        got += (got.empty() ? "" : " ") + label + " " + fraction(c.verified, c.total);
        losses += (losses.empty() ? "" : ", ") + label + " " + fraction(c.solver_losses, c.total);
      }
      r.note = "configurations the solver gives to the robber: " + losses;
      expect_equal(std::move(r), want, got);
    }
  }

  // ---- 10 ---------------------------------------------------------------------
  void covering() {
    {
      auto r = start("strategies lift through covering maps", "C6 -> C3, 2 fully active cops");
      auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover({3}));
      const bool valid = !validate_covering(*map).has_value();
      auto t = table(share(map->source), 2, kFullyActive);
      const auto src = best_placement(*t);
      std::vector<Vertex> real;
      for (Vertex v : src) real.push_back(map->image[v]);
      const auto v = exhaustive_verify_cop(map->target, kFullyActive, [&] {
        return std::make_unique<CoverLiftAdapter>(
            map, real, [t, src](Vertex) { return std::make_unique<OptimalCop>(t, src); }, kFullyActive);
      });
      r.note = v.message;
      expect_equal(std::move(r), "cover valid, lift captures",
                   std::string(valid ? "cover valid" : "cover invalid") + ", lift " +
                       (v.verified ? "captures" : "fails"));
    }
    {
      auto r = start("strategies lift through covering maps", "C6 x C6 -> C3 x C3, 3 fully active cops");
      auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover({3, 3}));
      const bool valid = !validate_covering(*map).has_value();
      auto t = table(share(map->source), 3, kPassive);
      const auto v = exhaustive_verify_cop(map->target, kFullyActive,
                                           [&] { return odd_cycle_product_strategy({3, 3}, map, t); });
      r.note = v.message;
      expect_equal(std::move(r), "cover valid, lift captures",
                   std::string(valid ? "cover valid" : "cover invalid") + ", lift " +
                       (v.verified ? "captures" : "fails"));
    }
  }

  // ---- 11 ---------------------------------------------------------------------
  void odd_cycles() {
    for (const std::vector<int>& lengths : {std::vector<int>{3, 3}, std::vector<int>{3, 4}}) {
      const std::string label = "C" + std::to_string(lengths[0]) + " x C" + std::to_string(lengths[1]);
      auto r = start("product of k cycles, one odd: acop <= k + 1", label + "; solver and composed strategy");
      auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover(lengths));
      const auto a = acop(map->target, 3);
      auto t = table(share(map->source), 3, kPassive);
      const auto v = exhaustive_verify_cop(map->target, kFullyActive,
                                           [&] { return odd_cycle_product_strategy(lengths, map, t); });
      r.note = v.message;
      expect_equal(std::move(r), "acop <= 3, strategy verified",
                   std::string(a ? "acop <= 3" : "acop > 3") + ", strategy " + (v.verified ? "verified" : "refuted"));
    }
  }

  // ---- 12 ---------------------------------------------------------------------
  void even_cycles() {
    {
      auto r = start("product of k even cycles: ceil(4k/3) <= acop <= ceil(8k/3)", "k = 1: acop(C4), acop(C6) in [2, 3]");
      const auto a4 = acop(cycle_graph(4)), a6 = acop(cycle_graph(6));
      expect_equal(std::move(r), "2,2", number_or_unknown(a4, 4) + "," + number_or_unknown(a6, 4));
    }
    {
      auto r = start("product of k even cycles: ceil(4k/3) <= acop <= ceil(8k/3)", "k = 2: acop(C4 x C4) in [3, 4]");
      const Graph g = cartesian_product(std::vector<Graph>{cycle_graph(4), cycle_graph(4)});
      const auto a = acop(g, 4);
      r.note = "exact value " + number_or_unknown(a, 4);
      expect_equal(std::move(r), "in [3, 4]", a && *a >= 3 && *a <= 4 ? "in [3, 4]" : number_or_unknown(a, 4));
    }
  }

  // ---- 13 ---------------------------------------------------------------------
  void product_hypothesis() {
    {
      auto r = start("the product bound needs cops that win from every placement",
                     "wins_from_all_placements at k = acop for C5 and K3");
      std::string got;
      for (const Graph& g : {cycle_graph(5), complete_graph(3)}) {
        const auto a = acop(g);
        const bool all = a && wins_from_all_placements(g, *a, kFullyActive);
        got += std::string(got.empty() ? "" : ",") + (all ? "true" : "false");
      }
      expect_equal(std::move(r), "true,true", got);
    }
    {
      auto r = start("the product bound is not always tight", "acop(K2 x C4)");
      const Graph g = cartesian_product(std::vector<Graph>{path_graph(2), cycle_graph(4)});
      expect_equal(std::move(r), "2", number_or_unknown(acop(g), 4));
    }
  }

  // ---- 14 ---------------------------------------------------------------------
  void oracle_equivalence() {
    auto r = start("micro-move solver matches a joint-move solver on every state",
                   "25 random connected graphs, n = 2..7, p = 0.4, k = 1, 2, all four rules, seeds " +
                       std::to_string(seed_for(0)) + ".." + std::to_string(seed_for(24)));
    std::uint64_t states = 0, mismatches = 0;
    for (int i = 0; i < 25; ++i) {
      const Graph g = random_connected(2 + i % 6, 0.4, seed_for(i));
      for (MovementRule rule : kAllRules)
        for (int k = 1; k <= 2; ++k) {
          const SolveTable t = solve(g, k, rule);
          const oracle::JointSolver o(g, k, rule);
          for_each_placement(g.vertex_count(), k, [&](const std::vector<Vertex>& cops) {
            for (Vertex y = 0; y < g.vertex_count(); ++y) {
              states += 2;
              mismatches += t.cop_win(t.space().round_start(cops, y)) != o.cops_win_cop_turn(cops, y);
              mismatches += t.cop_win(t.space().robber_state(cops, y)) != o.cops_win_robber_turn(cops, y);
            }
          });
        }
    }
    r.note = std::to_string(states) + " states compared";
    expect_equal(std::move(r), "0 mismatches", std::to_string(mismatches) + " mismatches");
  }

  const SuiteConfig& cfg_;
  CatalogContext ctx_;
  SuiteReport report_;
  int criterion_ = 0;
  char letter_ = 'a';
  Clock::time_point started_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string seconds_text(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s;
  return out.str();
}

}  // namespace

SuiteReport run_paper_suite(const SuiteConfig& config) { return Suite(config).run(); }

std::string SuiteReport::to_markdown(bool timings) const {
  std::ostringstream out;
  out << "# plab suite report\n\n";
  out << "- version: " << version << "\n- seed: " << seed << "\n- heavy: " << (heavy ? "yes" : "no") << "\n";
  out << "- totals: " << count(Verdict::Pass) << " passed, " << count(Verdict::Fail) << " failed, "
      << count(Verdict::Skipped) << " skipped\n\n";
  out << "## Criteria\n\n| criterion | verdict |\n|---|---|\n";
  for (int c = 1; c <= kCriteria; ++c) out << "| " << c << " | " << verdict_name(criterion_verdict(c)) << " |\n";
  out << "\n## Checks\n\n| id | claim | instance | expected | computed | verdict |" << (timings ? " seconds |" : "")
      << "\n|---|---|---|---|---|---|" << (timings ? "---|" : "") << "\n";
  for (const auto& r : records) {
    out << "| " << r.id << " | " << md_cell(r.anchor) << " | " << md_cell(r.instance) << " | " << md_cell(r.expected)
        << " | " << md_cell(r.computed) << " | " << verdict_name(r.verdict) << " |";
    if (timings) out << " " << seconds_text(r.seconds) << " |";
    out << "\n";
  }
  bool any_note = false;
  for (const auto& r : records) {
    if (r.note.empty()) continue;
    if (!any_note) out << "\n## Notes\n\n";
    any_note = true;
    out << "- " << r.id << ": " << r.note << "\n";
  }
  return out.str();
}

std::string SuiteReport::to_csv(bool timings) const {
  std::ostringstream out;
  out << "id,criterion,claim,instance,expected,computed,verdict,note" << (timings ? ",seconds" : "") << "\n";
  for (const auto& r : records) {
    out << r.id << "," << r.criterion << "," << csv_field(r.anchor) << "," << csv_field(r.instance) << ","
        << csv_field(r.expected) << "," << csv_field(r.computed) << "," << verdict_name(r.verdict) << ","
        << csv_field(r.note);
    if (timings) out << "," << seconds_text(r.seconds);
    out << "\n";
  }
  return out.str();
}

nlohmann::json SuiteReport::to_json(bool timings) const {
  nlohmann::json j;
  j["version"] = version;
  j["seed"] = seed;
  j["heavy"] = heavy;
  j["totals"] = {{"passed", count(Verdict::Pass)}, {"failed", count(Verdict::Fail)}, {"skipped", count(Verdict::Skipped)}};
  nlohmann::json criteria = nlohmann::json::array();
  for (int c = 1; c <= kCriteria; ++c) criteria.push_back({{"criterion", c}, {"verdict", verdict_name(criterion_verdict(c))}});
  j["criteria"] = criteria;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json x = {{"id", r.id},           {"criterion", r.criterion}, {"claim", r.anchor},
                        {"instance", r.instance}, {"expected", r.expected}, {"computed", r.computed},
                        {"verdict", verdict_name(r.verdict)}, {"note", r.note}};
    if (timings) x["seconds"] = r.seconds;
    checks.push_back(std::move(x));
  }
  j["checks"] = checks;
  return j;
}

void write_report(const SuiteReport& report, const std::string& dir, bool timings) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  std::ofstream(base / "report.md") << report.to_markdown(timings);
  std::ofstream(base / "report.csv") << report.to_csv(timings);
  std::ofstream(base / "report.json") << report.to_json(timings).dump(2) << "\n";
}

}  // namespace plab
