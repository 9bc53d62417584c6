#include "plab/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace plab {

using nlohmann::json;

namespace {

json label_to_json(const VertexLabel& label) {
  if (auto* p = std::get_if<ProductCoordinate>(&label)) return json{{"coords", p->coords}};
  if (auto* b = std::get_if<BlowupLabel>(&label)) return json{{"shadow", b->shadow}, {"copy", b->copy}};
  return nullptr;
}

VertexLabel label_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.contains("coords")) return ProductCoordinate{j.at("coords").get<std::vector<Vertex>>()};
  if (j.contains("shadow")) return BlowupLabel{j.at("shadow").get<Vertex>(), j.at("copy").get<int>()};
  throw FormatError("unrecognized vertex label: " + j.dump());
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json out{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) {
    json labels = json::array();
    for (const auto& l : g.labels()) labels.push_back(label_to_json(l));
    out["labels"] = std::move(labels);
  }
  return out;
}

Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("edge entries must be [u, v] pairs");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    Graph g = Graph::from_edges(n, edges);
    if (j.contains("labels") && !j.at("labels").is_null()) {
      std::vector<VertexLabel> labels;
      for (const auto& l : j.at("labels")) labels.push_back(label_from_json(l));
      g.set_labels(std::move(labels));
    }
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed graph JSON: ") + e.what());
  } catch (const ParameterError& e) {
    throw FormatError(std::string("invalid graph: ") + e.what());
  }
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph graph_from_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int largest = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      auto header = line.find("n=", hash);
      if (header != std::string::npos) declared = std::stoi(line.substr(header + 2));
      line.erase(hash);
    }
    std::istringstream fields(line);
    long long u, v;
    if (!(fields >> u)) continue;
    if (!(fields >> v)) throw FormatError("line " + std::to_string(line_no) + ": expected two vertex ids");
    std::string rest;
    if (fields >> rest) throw FormatError("line " + std::to_string(line_no) + ": trailing tokens");
    if (u < 0 || v < 0) throw FormatError("line " + std::to_string(line_no) + ": negative vertex id");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    largest = std::max<int>(largest, static_cast<int>(std::max(u, v)));
  }
  const int n = declared >= 0 ? declared : largest + 1;
  try {
    return Graph::from_edges(n, edges);
  } catch (const ParameterError& e) {
    throw FormatError(std::string("invalid edge list: ") + e.what());
  }
}

json embedding_to_json(const OuterplanarEmbedding& e) {
  json chords = json::array();
  for (auto [u, v] : e.chords) chords.push_back({u, v});
  return json{{"outer_cycle", e.outer_cycle}, {"chords", std::move(chords)}};
}

OuterplanarEmbedding embedding_from_json(const json& j) {
  try {
    OuterplanarEmbedding e;
    e.outer_cycle = j.at("outer_cycle").get<std::vector<Vertex>>();
    for (const auto& c : j.at("chords")) e.chords.emplace_back(c.at(0).get<Vertex>(), c.at(1).get<Vertex>());
    return e;
  } catch (const json::exception& ex) {
    throw FormatError(std::string("malformed embedding JSON: ") + ex.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file '" + path + "'");
  if (ends_with(path, ".json")) {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
    return graph_from_json(j);
  }
  return graph_from_edge_list(in);
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  if (ends_with(path, ".json"))
    out << graph_to_json(g).dump() << "\n";
  else
    out << graph_to_edge_list(g);
}

}  // namespace plab
