#include "plab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace plab {

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random tree needs n >= 1");
  if (n == 1) return path_graph(1);
  if (n == 2) return path_graph(2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = pick(rng);

  std::vector<int> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (Vertex x : prufer) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  Vertex u = *leaves.begin();
  Vertex v = *std::next(leaves.begin());
  edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random graph needs n >= 1");
  if (!(p > 0.0 && p <= 1.0) && n > 1) throw ParameterError("edge probability must be in (0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(n > 1 ? p : 0.5);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    if (g.connected()) return g;
  }
  throw ParameterError("could not sample a connected graph; raise p");
}

namespace {

// Dyck word of length 2m, uniform via the cycle lemma.
std::vector<int> random_dyck_word(int m, std::mt19937_64& rng) {
  std::vector<int> seq(2 * m + 1, -1);
  std::fill(seq.begin(), seq.begin() + m, +1);
  std::shuffle(seq.begin(), seq.end(), rng);
  // Rotate to start just after the first position of the minimum prefix sum.
  int sum = 0, best = 0, best_at = 0;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    sum += seq[i];
    if (sum < best) {
      best = sum;
      best_at = i + 1;
    }
  }
  std::rotate(seq.begin(), seq.begin() + best_at, seq.end());
  seq.pop_back();  // the trailing -1
  return seq;
}

// Word = "(" left ")" right encodes a binary tree; each node is one triangle
// over the polygon interval [lo, hi] with apex lo + |left| + 1.
void triangulate(const std::vector<int>& word, std::size_t& at, Vertex lo, Vertex hi, std::vector<Edge>& chords,
                 int n) {
  if (hi - lo < 2) return;
  // The next token must open this node.
  ++at;
  std::size_t left_start = at;
  int depth = 0;
  while (!(depth == 0 && word[at] == -1)) {
    depth += word[at];
    ++at;
  }
  const int left_nodes = static_cast<int>(at - left_start) / 2;
  ++at;  // closing token
  Vertex apex = lo + left_nodes + 1;
  std::size_t left_at = left_start;
  triangulate(word, left_at, lo, apex, chords, n);
  triangulate(word, at, apex, hi, chords, n);
  auto add = [&](Vertex a, Vertex b) {
    if (b - a >= 2 && !(a == 0 && b == n - 1)) chords.emplace_back(a, b);
  };
  add(lo, apex);
  add(apex, hi);
}

}  // namespace

std::pair<Graph, OuterplanarEmbedding> random_maximal_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw ParameterError("maximal outerplanar generator needs n >= 3");
  std::mt19937_64 rng(seed);
  auto word = random_dyck_word(n - 2, rng);
  std::vector<Edge> polygon_chords;
  std::size_t at = 0;
  triangulate(word, at, 0, n - 1, polygon_chords, n);

  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);

  std::vector<Edge> edges;
  OuterplanarEmbedding emb;
  for (Vertex i = 0; i < n; ++i) {
    emb.outer_cycle.push_back(relabel[i]);
    edges.emplace_back(relabel[i], relabel[(i + 1) % n]);
  }
  for (auto [a, b] : polygon_chords) {
    Vertex u = relabel[a], v = relabel[b];
    emb.chords.emplace_back(std::min(u, v), std::max(u, v));
    edges.emplace_back(u, v);
  }
  std::sort(emb.chords.begin(), emb.chords.end());
  return {Graph::from_edges(n, edges), std::move(emb)};
}

}  // namespace plab
