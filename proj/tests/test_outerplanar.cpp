#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "plab/arena.hpp"
#include "plab/blocks.hpp"
#include "plab/generators.hpp"
#include "plab/solver.hpp"
#include "plab/strategies/outerplanar_cop.hpp"

using namespace plab;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

VerifyResult verify_outerplanar(std::shared_ptr<const Graph> g, std::optional<OuterplanarEmbedding> emb = {}) {
  VerifyCopOptions o;
  o.round_bound = 20 * g->vertex_count() * g->vertex_count();
  return exhaustive_verify_cop(*g, kFullyActive, [&] { return std::make_unique<OuterplanarCop>(g, emb); }, o);
}

// Longest run of cop rounds without the territory growing, over every robber
// play of at most `depth` rounds. Also fails if it ever shrinks.
int longest_stall(std::shared_ptr<const Graph> g, int depth) {
  int worst = 0;
  std::function<void(const OuterplanarCop&, Vertex, int, int, int)> walk = [&](const OuterplanarCop& cop,
                                                                               Vertex robber, int round, int best,
                                                                               int stall) {
    if (round == depth) return;
    auto next = cop.clone();
    auto& c = static_cast<OuterplanarCop&>(*next);
    const auto pos = c.respond(robber);
    if (std::find(pos.begin(), pos.end(), robber) != pos.end()) return;
    const int t = c.territory();
    if (t > 0) CHECK(t >= best);
    if (t > best) {
      best = t;
      stall = 0;
    } else {
      ++stall;
    }
    worst = std::max(worst, stall);
    for (Vertex w : g->neighbors(robber))
      if (std::find(pos.begin(), pos.end(), w) == pos.end()) walk(c, w, round + 1, best, stall);
  };
  OuterplanarCop cop(g);
  const auto start = cop.place();
  for (Vertex y = 0; y < g->vertex_count(); ++y)
    if (std::find(start.begin(), start.end(), y) == start.end()) {
      OuterplanarCop fresh(g);
      fresh.place();
      walk(fresh, y, 0, 0, 0);
    }
  return worst;
}

// Blocks and bridges glued at random existing vertices.
Graph glued_outerplanar(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  int n = 1;
  const int pieces = 2 + static_cast<int>(rng() % 3);
  for (int i = 0; i < pieces; ++i) {
    const Vertex at = static_cast<Vertex>(rng() % n);
    const int size = 2 + static_cast<int>(rng() % 5);
    auto [piece, emb] = size == 2 ? std::pair{path_graph(2), OuterplanarEmbedding{}}
                                  : random_maximal_outerplanar(size, rng());
    auto id = [&](Vertex v) { return v == 0 ? at : static_cast<Vertex>(n + v - 1); };
    for (auto [u, v] : piece.edges()) {
      const Vertex x = id(u), y = id(v);
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    n += size - 1;
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("outerplanar cop on C6 captures within 3n rounds") {
  auto g = share(cycle_graph(6));
  const auto r = verify_outerplanar(g);
  INFO(r.message);
  CHECK(r.verified);
  CHECK(r.worst_rounds <= 18);
}

TEST_CASE("outerplanar cop on the fan F5: territory grows within diameter rounds") {
  auto g = share(fan_graph(5));
  const auto r = verify_outerplanar(g);
  INFO(r.message);
  CHECK(r.verified);
  CHECK(longest_stall(g, 12) <= DistanceTable(*g).diameter());
}

TEST_CASE("outerplanar cop on random maximal outerplanar graphs") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    auto [graph, emb] = random_maximal_outerplanar(n, seed);
    auto g = share(std::move(graph));
    const auto r = verify_outerplanar(g, emb);
    INFO("seed=", seed, " n=", n, " : ", r.message);
    if (n >= 10) CHECK(longest_stall(g, 10) <= DistanceTable(*g).diameter());
    CHECK(r.verified);
  }
}

TEST_CASE("outerplanar cop with cut vertices") {
  const std::vector<std::pair<const char*, Graph>> cases = {
      {"K1", path_graph(1)},
      {"K2", path_graph(2)},
      {"P6", path_graph(6)},
      {"star", complete_bipartite_graph(1, 5)},
      {"bowtie", Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})},
      {"cycles on a path",
       Graph::from_edges(11, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}, {5, 6}, {6, 7},
                                               {7, 8}, {8, 4}, {6, 9}, {9, 10}})},
      {"fan with tails", Graph::from_edges(9, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                                                                {3, 4}, {4, 5}, {5, 6}, {1, 7}, {7, 8}})},
  };
  for (const auto& [label, graph] : cases) {
    auto g = share(graph);
    const auto r = verify_outerplanar(g);
    INFO(label, " : ", r.message);
    CHECK(r.verified);
  }
}

TEST_CASE("outerplanar cop on random glued outerplanar graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = share(glued_outerplanar(seed));
    const auto r = verify_outerplanar(g);
    INFO("seed=", seed, " n=", g->vertex_count(), " blocks=", block_cut_tree(*g).blocks.size(), " : ", r.message);
    CHECK(r.verified);
  }
}

TEST_CASE("outerplanar cop refuses bad input") {
  CHECK_THROWS_AS(OuterplanarCop(share(complete_graph(4))), ParameterError);
  CHECK_THROWS_AS(OuterplanarCop(share(Graph::from_edges(3, std::vector<Edge>{{0, 1}}))), ParameterError);
  auto c5 = share(cycle_graph(5));
  OuterplanarEmbedding wrong{{0, 2, 1, 3, 4}, {}};
  CHECK_THROWS_AS(OuterplanarCop(c5, wrong), ParameterError);
  OuterplanarCop cop(c5);
  cop.place();
  cop.respond(2);
  CHECK_THROWS_AS(cop.respond(4), StrategyError);
}

TEST_CASE("solver agrees: two fully active cops suffice on small outerplanar graphs") {
  for (std::uint64_t seed = 100; seed < 105; ++seed) {
    auto [g, emb] = random_maximal_outerplanar(7, seed);
    CHECK(cop_number(g, kFullyActive, 2).has_value());
  }
}
