#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "plab/blocks.hpp"
#include "plab/covering.hpp"
#include "plab/generators.hpp"
#include "plab/graph.hpp"
#include "plab/graph_io.hpp"
#include "plab/outerplanar.hpp"

using namespace plab;

namespace {

int edges_of(const Graph& g) { return static_cast<int>(g.edges().size()); }

bool regular(const Graph& g, int d) { return g.min_degree() == d && g.max_degree() == d; }

// Hand-rolled product distance: sum of per-factor BFS distances.
int coordinate_distance(std::span<const Graph> factors, const ProductCoordinate& a, const ProductCoordinate& b) {
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) total += factors[i].distances_from(a.coords[i])[b.coords[i]];
  return total;
}

}  // namespace

TEST_CASE("families") {
  Graph p1 = path_graph(1);
  CHECK(p1.vertex_count() == 1);
  CHECK(edges_of(p1) == 0);

  Graph c4 = cycle_graph(4);
  CHECK(c4.vertex_count() == 4);
  CHECK(edges_of(c4) == 4);
  CHECK(regular(c4, 2));

  Graph q3 = hypercube_graph(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(edges_of(q3) == 12);
  CHECK(bipartition(q3).has_value());

  CHECK(edges_of(complete_graph(5)) == 10);
  CHECK(edges_of(complete_bipartite_graph(2, 3)) == 6);
  CHECK(edges_of(petersen_graph()) == 15);
  CHECK(regular(petersen_graph(), 3));

  const int sizes[] = {5};
  CHECK(build_family(Family::Cycle, sizes) == cycle_graph(5));
  CHECK(parse_family("complete_bipartite") == Family::CompleteBipartite);
  CHECK_FALSE(parse_family("wheel").has_value());
}

TEST_CASE("family parameter errors") {
  CHECK_THROWS_AS(path_graph(0), ParameterError);
  CHECK_THROWS_AS(cycle_graph(2), ParameterError);
  CHECK_THROWS_AS(complete_bipartite_graph(0, 3), ParameterError);
  CHECK_THROWS_AS(vab_graph(1, 2), ParameterError);
  CHECK_THROWS_AS(vab_graph(2, 1), ParameterError);
  CHECK_THROWS_AS(blowup(path_graph(2), 0), ParameterError);
  CHECK_THROWS_AS(cartesian_product(std::span<const Graph>{}), ParameterError);
  const Edge loop[] = {{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), ParameterError);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, dup), ParameterError);
  const Edge out[] = {{0, 2}};
  CHECK_THROWS_AS(Graph::from_edges(2, out), ParameterError);
}

TEST_CASE("vab gadget") {
  Graph g = vab_graph(2, 2);
  CHECK(g.vertex_count() == 5);
  CHECK(edges_of(g) == 7);
  // v sees exactly A; B is a clique; A-B complete.
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.adjacent(3, 4));
  CHECK_FALSE(g.adjacent(1, 2));
  for (Vertex a : {1, 2})
    for (Vertex b : {3, 4}) CHECK(g.adjacent(a, b));
}

TEST_CASE("cartesian products") {
  Graph k2 = path_graph(2);
  const Graph k2k2[] = {k2, k2};
  Graph sq = cartesian_product(k2k2);
  CHECK(sq.vertex_count() == 4);
  CHECK(edges_of(sq) == 4);
  CHECK(regular(sq, 2));
  CHECK(bipartition(sq).has_value());

  const Graph c3c3[] = {cycle_graph(3), cycle_graph(3)};
  Graph t = cartesian_product(c3c3);
  CHECK(t.vertex_count() == 9);
  CHECK(regular(t, 4));

  // Distances add up across factors.
  const Graph factors[] = {path_graph(3), cycle_graph(5), path_graph(2)};
  Graph prod = cartesian_product(factors);
  DistanceTable dist(prod);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Vertex u = static_cast<Vertex>(rng() % prod.vertex_count());
    Vertex v = static_cast<Vertex>(rng() % prod.vertex_count());
    const auto& lu = std::get<ProductCoordinate>(prod.label(u));
    const auto& lv = std::get<ProductCoordinate>(prod.label(v));
    CHECK(dist(u, v) == coordinate_distance(factors, lu, lv));
  }
  const int radix[] = {3, 5, 2};
  const Vertex coords[] = {2, 4, 1};
  CHECK(std::get<ProductCoordinate>(prod.label(product_vertex(radix, coords))).coords ==
        std::vector<Vertex>{2, 4, 1});
}

TEST_CASE("blowups") {
  Graph k33 = blowup(path_graph(2), 3);
  CHECK(k33 == complete_bipartite_graph(3, 3));

  Graph big = blowup(hypercube_graph(3), 4);
  CHECK(big.vertex_count() == 32);
  CHECK(regular(big, 12));

  Graph base = random_connected(6, 0.5, 3);
  Graph b = blowup(base, 3);
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    const auto& label = std::get<BlowupLabel>(b.label(v));
    CHECK(label.copy < 3);
    CHECK(b.degree(v) == 3 * base.degree(label.shadow));
  }
}

TEST_CASE("bipartition") {
  auto c4 = bipartition(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->x == std::vector<Vertex>{0, 2});
  CHECK(c4->y == std::vector<Vertex>{1, 3});
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
  auto q3 = bipartition(hypercube_graph(3));
  REQUIRE(q3);
  CHECK(q3->x.size() == 4);
  CHECK(q3->y.size() == 4);
  const Edge two_parts[] = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(bipartition(Graph::from_edges(4, two_parts)), ParameterError);
}

TEST_CASE("generators are reproducible and well formed") {
  CHECK(random_tree(2, 99) == path_graph(2));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    Graph t = random_tree(n, seed);
    t.check_invariants();
    CHECK(edges_of(t) == n - 1);
    CHECK(t.connected());
    CHECK(t == random_tree(n, seed));

    Graph r = random_connected(n, 0.4, seed);
    r.check_invariants();
    CHECK(r.connected());
    CHECK(r == random_connected(n, 0.4, seed));

    const int m = 3 + static_cast<int>(seed % 10);
    auto [op, emb] = random_maximal_outerplanar(m, seed);
    op.check_invariants();
    CHECK(edges_of(op) == 2 * m - 3);
    CHECK_FALSE(validate_embedding(op, emb).has_value());
    CHECK(random_maximal_outerplanar(m, seed).first == op);
  }
  CHECK_THROWS_AS(random_maximal_outerplanar(2, 1), ParameterError);
  CHECK_THROWS_AS(random_tree(0, 1), ParameterError);
}

TEST_CASE("outerplanar embedding validation") {
  Graph fan = fan_graph(5);
  auto emb = find_outerplanar_embedding(fan);
  REQUIRE(emb);
  CHECK_FALSE(validate_embedding(fan, *emb).has_value());

  // K4 drawn on its 4-cycle needs both diagonals, which cross.
  Graph k4 = complete_graph(4);
  OuterplanarEmbedding crossing{{0, 1, 2, 3}, {{0, 2}, {1, 3}}};
  CHECK(validate_embedding(k4, crossing).has_value());
  CHECK_FALSE(find_outerplanar_embedding(k4).has_value());

  // Missing chord, wrong cycle.
  OuterplanarEmbedding missing{{0, 1, 2, 3, 4}, {{0, 2}}};
  CHECK(validate_embedding(fan, missing).has_value());
  OuterplanarEmbedding not_cycle{{0, 2, 1, 3, 4}, {}};
  CHECK(validate_embedding(fan, not_cycle).has_value());
}

TEST_CASE("block cut tree") {
  auto p3 = block_cut_tree(path_graph(3));
  CHECK(p3.blocks.size() == 2);
  CHECK(p3.cut_vertices == std::vector<Vertex>{1});

  auto c5 = block_cut_tree(cycle_graph(5));
  CHECK(c5.blocks.size() == 1);
  CHECK(c5.cut_vertices.empty());

  const Edge bowtie[] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
  auto bt = block_cut_tree(Graph::from_edges(5, bowtie));
  CHECK(bt.blocks.size() == 2);
  CHECK(bt.cut_vertices == std::vector<Vertex>{2});

  // Every edge in exactly one block, on random graphs.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected(8, 0.3, seed);
    auto d = block_cut_tree(g);
    std::multiset<Edge> seen;
    for (const auto& es : d.block_edges)
      for (auto e : es) seen.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
    auto all = g.edges();
    CHECK(seen == std::multiset<Edge>(all.begin(), all.end()));
  }
  const Edge two_parts[] = {{0, 1}, {2, 3}};
  CHECK_THROWS(block_cut_tree(Graph::from_edges(4, two_parts)));
}

TEST_CASE("covering maps") {
  auto cover = doubled_cycle_cover({3});
  CHECK(cover.source == cycle_graph(6));
  for (Vertex x = 0; x < 6; ++x) CHECK(cover.image[x] == x % 3);
  CHECK_FALSE(validate_covering(cover).has_value());

  CHECK_FALSE(validate_covering(identity_cover(petersen_graph())).has_value());

  CoveringMap constant{cycle_graph(4), cycle_graph(4), {0, 0, 0, 0}};
  CHECK(validate_covering(constant).has_value());

  for (const auto& lengths : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {5}, {4, 3, 3}}) {
    auto c = doubled_cycle_cover(lengths);
    CHECK_FALSE(validate_covering(c).has_value());
    // Local bijectivity by direct enumeration.
    for (Vertex v = 0; v < c.source.vertex_count(); ++v) {
      std::set<Vertex> images;
      for (Vertex w : c.source.neighbors(v)) images.insert(c.image[w]);
      auto nb = c.target.neighbors(c.image[v]);
      CHECK(images == std::set<Vertex>(nb.begin(), nb.end()));
      CHECK(images.size() == static_cast<std::size_t>(c.source.degree(v)));
    }
  }
  CHECK_THROWS_AS(doubled_cycle_cover({2}), ParameterError);
}

TEST_CASE("graph io round trips") {
  const Graph factors[] = {path_graph(2), cycle_graph(3)};
  Graph g = cartesian_product(factors);
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);
  CHECK(back.labels() == g.labels());

  Graph b = blowup(path_graph(3), 2);
  CHECK(graph_from_json(graph_to_json(b)).labels() == b.labels());

  std::istringstream in(graph_to_edge_list(petersen_graph()));
  CHECK(graph_from_edge_list(in) == petersen_graph());

  std::istringstream isolated("# n=3\n0 1\n");
  CHECK(graph_from_edge_list(isolated).vertex_count() == 3);

  std::istringstream garbage("0 x\n");
  CHECK_THROWS_AS(graph_from_edge_list(garbage), FormatError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": [[0, 1]]})")), FormatError);

  auto [op, emb] = random_maximal_outerplanar(7, 4);
  auto emb2 = embedding_from_json(embedding_to_json(emb));
  CHECK(emb2.outer_cycle == emb.outer_cycle);
  CHECK(emb2.chords == emb.chords);
}
