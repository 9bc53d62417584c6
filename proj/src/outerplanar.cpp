#include "plab/outerplanar.hpp"

#include <algorithm>
#include <set>

namespace plab {

namespace {

// Chords (a,b) and (c,d), given as cycle positions, cross iff exactly one
// endpoint of the second lies strictly inside the arc of the first.
bool crossing(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  auto inside = [&](int x) { return a < x && x < b; };
  if (c == a || c == b || d == a || d == b) return false;
  return inside(c) != inside(d);
}

}  // namespace

std::optional<std::string> validate_embedding(const Graph& g, const OuterplanarEmbedding& embedding) {
  const int n = g.vertex_count();
  const auto& cycle = embedding.outer_cycle;
  if (static_cast<int>(cycle.size()) != n) return "outer cycle does not visit every vertex exactly once";
  if (n < 3) return "outer cycle needs at least 3 vertices";
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = cycle[i];
    if (v < 0 || v >= n || pos[v] >= 0) return "outer cycle is not a permutation of the vertices";
    pos[v] = i;
  }
  std::set<Edge> cycle_edges;
  for (int i = 0; i < n; ++i) {
    Vertex u = cycle[i], v = cycle[(i + 1) % n];
    if (!g.adjacent(u, v))
      return "outer cycle step " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge";
    cycle_edges.insert({std::min(u, v), std::max(u, v)});
  }
  std::set<Edge> chords;
  for (auto [u, v] : embedding.chords) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (e.first < 0 || e.second >= n || !g.adjacent(e.first, e.second))
      return "chord " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge";
    if (cycle_edges.count(e)) return "chord " + std::to_string(u) + "-" + std::to_string(v) + " lies on the outer cycle";
    if (!chords.insert(e).second) return "duplicate chord";
  }
  if (static_cast<int>(cycle_edges.size() + chords.size()) != g.edge_count())
    return "cycle edges and chords do not cover the edge set";
  std::vector<Edge> list(chords.begin(), chords.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (crossing(pos[list[i].first], pos[list[i].second], pos[list[j].first], pos[list[j].second]))
        return "chords " + std::to_string(list[i].first) + "-" + std::to_string(list[i].second) + " and " +
               std::to_string(list[j].first) + "-" + std::to_string(list[j].second) + " cross";
  return std::nullopt;
}

std::optional<OuterplanarEmbedding> find_outerplanar_embedding(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw ParameterError("outer cycle search is limited to 64 vertices");
  if (n < 3) return std::nullopt;
  std::vector<Vertex> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::optional<OuterplanarEmbedding> found;

  auto try_cycle = [&]() {
    OuterplanarEmbedding e;
    e.outer_cycle = path;
    std::set<Edge> cycle_edges;
    for (int i = 0; i < n; ++i) {
      Vertex u = path[i], v = path[(i + 1) % n];
      cycle_edges.insert({std::min(u, v), std::max(u, v)});
    }
    for (auto edge : g.edges())
      if (!cycle_edges.count(edge)) e.chords.push_back(edge);
    if (!validate_embedding(g, e)) found = std::move(e);
  };

  auto extend = [&](auto&& self) -> void {
    if (found) return;
    if (static_cast<int>(path.size()) == n) {
      if (g.adjacent(path.back(), path.front())) try_cycle();
      return;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (used[w]) continue;
      // fix orientation: second vertex smaller than the last one
      if (static_cast<int>(path.size()) == n - 1 && n > 2 && w < path[1]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = 0;
      if (found) return;
    }
  };
  extend(extend);
  return found;
}

}  // namespace plab
