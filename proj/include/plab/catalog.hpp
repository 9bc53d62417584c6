#pragma once

// Text names for graphs and controllers, as used on the command line.
//
// Graph specs:
//   path:N  cycle:N  complete:N  complete-bipartite:M,N  hypercube:D
//   petersen  fan:N  vab:A,B  tree:N,SEED  random:N,P,SEED  outerplanar:N,SEED
//   SPEC*SPEC (Cartesian product)  blowup(T,SPEC)  (SPEC)  file:PATH
//
// Controller specs: NAME or NAME:key=value,key=value, e.g.
//   optimal:rule=passive,k=2   outerplanar   blowup-robber:k=2

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plab/arena.hpp"
#include "plab/outerplanar.hpp"
#include "plab/table_cache.hpp"

namespace plab {

class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphInstance {
  std::string id;    // canonical spec text
  std::string kind;  // leading spec word
  std::vector<double> args;
  std::shared_ptr<const Graph> graph;
  std::optional<OuterplanarEmbedding> embedding;
  std::vector<GraphInstance> factors;  // product
  std::shared_ptr<const GraphInstance> base;  // blowup
  int blowup_t = 0;
};

// Throws ParameterError on malformed specs or parameters, UnknownNameError
// on unknown graph names, FormatError on unreadable files.
GraphInstance build_graph(const std::string& spec);

struct ControllerSpec {
  std::string name;
  std::map<std::string, std::string> params;

  static ControllerSpec parse(const std::string& text);
  std::string text() const;
  std::optional<std::string> get(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
};

// Context shared by controller constructors. The cache backs every solver
// table a controller needs; null means solve in memory.
struct CatalogContext {
  TableCache* cache = nullptr;
  std::uint64_t seed = 0;
  std::optional<MovementRule> rule;  // default for controllers taking rule=
};

struct CopEntry {
  CopFactory factory;
  int cops = 0;
  MovementRule rule;
  std::string label;
};

struct RobberEntry {
  RobberFactory factory;
  MovementRule rule;
  std::string label;
};

// Cop controllers: optimal[:rule=R,k=K], outerplanar, doubling[:k=K],
// shadow[:k=K], same-partite[:k=K,shared=cop-turn|robber-turn],
// tree-pair[:start=V], tree-product[:cops=M], odd-cycle[:shared=...].
CopEntry make_cop(const std::string& text, const GraphInstance& g, const CatalogContext& ctx);

// Robber controllers: optimal[:rule=R,k=K], random[:seed=S,rule=R],
// tree-product-robber, blowup-robber[:k=K]. `cops` is the opposing team
// size, used for defaults.
RobberEntry make_robber(const std::string& text, const GraphInstance& g, int cops, const CatalogContext& ctx);

std::vector<std::string> cop_controller_names();
std::vector<std::string> robber_controller_names();

std::shared_ptr<const SolveTable> table_from(const CatalogContext& ctx, std::shared_ptr<const Graph> g, int cops,
                                             MovementRule rule);

}  // namespace plab
