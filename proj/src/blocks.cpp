#include "plab/blocks.hpp"

#include <algorithm>

namespace plab {

BlockDecomposition block_cut_tree(const Graph& g) {
  if (!g.connected()) throw ParameterError("block decomposition needs a connected graph");
  const int n = g.vertex_count();
  BlockDecomposition out;
  out.blocks_of_vertex.assign(n, {});
  if (n == 1) {
    out.blocks.push_back({0});
    out.block_edges.emplace_back();
    out.blocks_of_vertex[0].push_back(0);
    return out;
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  std::vector<std::vector<Edge>> raw_blocks;

  stack.push_back({0, -1, 0});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      if (disc[w] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    Vertex u = stack.back().v;
    low[u] = std::min(low[u], low[done.v]);
    if (low[done.v] >= disc[u]) {
      std::vector<Edge> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
        if (e.first == u && e.second == done.v) break;
      }
      std::sort(block.begin(), block.end());
      raw_blocks.push_back(std::move(block));
    }
  }

  std::sort(raw_blocks.begin(), raw_blocks.end());
  for (auto& edges : raw_blocks) {
    std::vector<Vertex> verts;
    for (auto [a, b] : edges) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int id = static_cast<int>(out.blocks.size());
    for (Vertex v : verts) out.blocks_of_vertex[v].push_back(id);
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(edges));
  }
  for (Vertex v = 0; v < n; ++v)
    if (out.blocks_of_vertex[v].size() > 1) out.cut_vertices.push_back(v);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

}  // namespace plab
