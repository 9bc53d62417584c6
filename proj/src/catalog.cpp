#include "plab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "plab/generators.hpp"
#include "plab/graph_io.hpp"
#include "plab/optimal.hpp"
#include "plab/strategies/adapters.hpp"
#include "plab/strategies/outerplanar_cop.hpp"
#include "plab/strategies/products.hpp"
#include "plab/strategies/random_robber.hpp"

namespace plab {

namespace {

// ---- graph specs ------------------------------------------------------------

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GraphInstance parse() {
    GraphInstance g = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParameterError("graph spec \"" + std::string(s_) + "\" at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  double number() {
    skip();
    double v = 0;
    auto [end, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    i_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }

  std::string word() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-' || s_[i_] == '_'))
      ++i_;
    if (start == i_) fail("expected a graph name");
    return std::string(s_.substr(start, i_ - start));
  }

  GraphInstance expr() {
    std::vector<GraphInstance> parts{term()};
    while (eat('*')) parts.push_back(term());
    if (parts.size() == 1) return std::move(parts.front());
    GraphInstance g;
    g.kind = "product";
    std::vector<Graph> graphs;
    for (const auto& p : parts) {
      g.id += (g.id.empty() ? "" : "*") + (p.kind == "product" ? "(" + p.id + ")" : p.id);
      graphs.push_back(*p.graph);
    }
    g.graph = std::make_shared<const Graph>(cartesian_product(graphs));
    g.factors = std::move(parts);
    return g;
  }

  GraphInstance term() {
    if (eat('(')) {
      GraphInstance g = expr();
      expect(')');
      return g;
    }
    const std::string name = word();
    if (name == "blowup") {
      expect('(');
      const int t = integer(number(), "t");
      expect(',');
      GraphInstance base = expr();
      expect(')');
      if (t < 1) fail("blowup factor must be positive");
      GraphInstance g;
      g.kind = "blowup";
      g.args = {static_cast<double>(t)};
      g.id = "blowup(" + std::to_string(t) + "," + base.id + ")";
      g.graph = std::make_shared<const Graph>(blowup(*base.graph, t));
      g.blowup_t = t;
      g.base = std::make_shared<const GraphInstance>(std::move(base));
      return g;
    }
    if (name == "file") {
      expect(':');
      const std::string path(s_.substr(i_));
      i_ = s_.size();
      GraphInstance g;
      g.kind = "file";
      g.id = "file:" + path;
      g.graph = std::make_shared<const Graph>(load_graph_file(path));
      return g;
    }
    std::vector<double> args;
    if (eat(':')) {
      args.push_back(number());
      while (true) {
        const std::size_t save = i_;
        if (!eat(',')) break;
        skip();
        if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
          args.push_back(number());
        } else {
          i_ = save;
          break;
        }
      }
    }
    return family(name, args);
  }

  int integer(double v, const std::string& what) const {
    if (v != std::floor(v) || v < 0 || v > 1e9) fail(what + " must be a non-negative integer");
    return static_cast<int>(v);
  }

  GraphInstance family(const std::string& name, const std::vector<double>& args) {
    auto want = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi)
        fail(name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
             " parameter(s)");
    };
    auto arg = [&](std::size_t i) { return integer(args[i], name + " parameter " + std::to_string(i + 1)); };
    GraphInstance g;
    g.kind = name;
    g.args = args;
    Graph built;
    if (name == "path") {
      want(1, 1);
      built = path_graph(arg(0));
    } else if (name == "cycle") {
      want(1, 1);
      built = cycle_graph(arg(0));
    } else if (name == "complete") {
      want(1, 1);
      built = complete_graph(arg(0));
    } else if (name == "complete-bipartite") {
      want(2, 2);
      built = complete_bipartite_graph(arg(0), arg(1));
    } else if (name == "hypercube") {
      want(1, 1);
      built = hypercube_graph(arg(0));
    } else if (name == "petersen") {
      want(0, 0);
      built = petersen_graph();
    } else if (name == "fan") {
      want(1, 1);
      built = fan_graph(arg(0));
    } else if (name == "vab") {
      want(2, 2);
      built = vab_graph(arg(0), arg(1));
    } else if (name == "tree") {
      want(1, 2);
      built = random_tree(arg(0), args.size() > 1 ? arg(1) : 0);
    } else if (name == "random") {
      want(2, 3);
      if (args[1] < 0 || args[1] > 1) fail("edge probability must lie in [0, 1]");
      built = random_connected(arg(0), args[1], args.size() > 2 ? arg(2) : 0);
    } else if (name == "outerplanar") {
      want(1, 2);
      auto [graph, emb] = random_maximal_outerplanar(arg(0), args.size() > 1 ? arg(1) : 0);
      built = std::move(graph);
      g.embedding = std::move(emb);
    } else {
      throw UnknownNameError("unknown graph family \"" + name +
                             "\"; expected one of path, cycle, complete, complete-bipartite, hypercube, petersen, "
                             "fan, vab, tree, random, outerplanar, blowup, file");
    }
    std::ostringstream id;
    id << name;
    for (std::size_t i = 0; i < args.size(); ++i) id << (i == 0 ? ":" : ",") << args[i];
    g.id = id.str();
    g.graph = std::make_shared<const Graph>(std::move(built));
    return g;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// ---- controller helpers -----------------------------------------------------

MovementRule rule_param(const ControllerSpec& spec, const CatalogContext& ctx, MovementRule fallback) {
  if (auto text = spec.get("rule")) {
    auto rule = parse_rule(*text);
    if (!rule) throw ParameterError("unknown rule \"" + *text + "\"; expected passive, fully-active, active or lazy");
    return *rule;
  }
  return ctx.rule.value_or(fallback);
}

int cops_param(const ControllerSpec& spec, const GraphInstance& g, const CatalogContext& ctx, MovementRule rule,
               const char* key = "k") {
  const int k = spec.get_int(key, 0);
  if (k > 0) return k;
  const auto number = cop_number(*g.graph, rule, 4, ctx.cache);
  if (!number)
    throw ParameterError(spec.name + ": no team of at most 4 cops wins under " + rule.name() + "; pass " + key +
                         "=...");
  return *number;
}

SharedSide shared_param(const ControllerSpec& spec, SharedSide fallback) {
  const auto text = spec.get("shared");
  if (!text) return fallback;
  if (*text == "cop-turn") return SharedSide::CopTurn;
  if (*text == "robber-turn") return SharedSide::RobberTurn;
  throw ParameterError("shared must be cop-turn or robber-turn, got \"" + *text + "\"");
}

std::shared_ptr<const TreeProduct> tree_product_of(const GraphInstance& g, const std::string& who) {
  std::vector<Graph> trees;
  if (g.kind == "product")
    for (const auto& f : g.factors) trees.push_back(*f.graph);
  else if (g.kind == "hypercube")
    trees.assign(static_cast<std::size_t>(g.args.at(0)), path_graph(2));
  else
    trees.push_back(*g.graph);
  std::shared_ptr<const TreeProduct> product;
  try {
    product = std::make_shared<const TreeProduct>(std::move(trees));
  } catch (const ParameterError& e) {
    throw ParameterError(who + " needs a product of trees (e.g. path:3*path:4): " + e.what());
  }
  if (!(product->graph() == *g.graph)) throw std::logic_error(who + ": product vertex numbering mismatch");
  return product;
}

std::vector<int> cycle_lengths_of(const GraphInstance& g) {
  std::vector<const GraphInstance*> parts;
  if (g.kind == "product")
    for (const auto& f : g.factors) parts.push_back(&f);
  else
    parts.push_back(&g);
  std::vector<int> lengths;
  for (const auto* p : parts) {
    if (p->kind != "cycle") throw ParameterError("odd-cycle needs a product of cycles (e.g. cycle:3*cycle:4)");
    lengths.push_back(static_cast<int>(p->args.at(0)));
  }
  return lengths;
}

void reject_unknown(const ControllerSpec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : spec.params)
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
      throw ParameterError(spec.name + " does not take parameter \"" + key + "\"");
}

}  // namespace

GraphInstance build_graph(const std::string& spec) { return SpecParser(spec).parse(); }

// ---- controller specs ---------------------------------------------------------

ControllerSpec ControllerSpec::parse(const std::string& text) {
  ControllerSpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) throw ParameterError("empty controller name");
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParameterError("controller parameter \"" + item + "\" is not key=value");
    spec.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

std::string ControllerSpec::text() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

std::optional<std::string> ControllerSpec::get(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

int ControllerSpec::get_int(const std::string& key, int fallback) const {
  const auto text = get(key);
  if (!text) return fallback;
  int v = 0;
  auto [end, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc() || end != text->data() + text->size())
    throw ParameterError(name + ": parameter " + key + " must be an integer, got \"" + *text + "\"");
  return v;
}

std::shared_ptr<const SolveTable> table_from(const CatalogContext& ctx, std::shared_ptr<const Graph> g, int cops,
                                             MovementRule rule) {
  if (ctx.cache) return ctx.cache->get_or_solve(std::move(g), cops, rule);
  return std::make_shared<const SolveTable>(solve(std::move(g), cops, rule));
}

std::vector<std::string> cop_controller_names() {
  return {"optimal", "outerplanar", "doubling", "shadow", "same-partite", "tree-pair", "tree-product", "odd-cycle"};
}

std::vector<std::string> robber_controller_names() {
  return {"optimal", "random", "tree-product-robber", "blowup-robber"};
}

CopEntry make_cop(const std::string& text, const GraphInstance& g, const CatalogContext& ctx) {
  const ControllerSpec spec = ControllerSpec::parse(text);
  const auto graph = g.graph;
  CopEntry e;
  e.label = spec.text();
  if (spec.name == "optimal") {
    reject_unknown(spec, {"rule", "k"});
    e.rule = rule_param(spec, ctx, kPassive);
    e.cops = cops_param(spec, g, ctx, e.rule);
    auto table = table_from(ctx, graph, e.cops, e.rule);
    e.factory = [table] { return std::make_unique<OptimalCop>(table); };
  } else if (spec.name == "outerplanar") {
    reject_unknown(spec, {});
    OuterplanarCop probe(graph, g.embedding);
    e.rule = kFullyActive;
    e.cops = 2;
    e.factory = [graph, emb = g.embedding] { return std::make_unique<OuterplanarCop>(graph, emb); };
  } else if (spec.name == "doubling") {
    reject_unknown(spec, {"k"});
    const int k = cops_param(spec, g, ctx, kPassive);
    auto table = table_from(ctx, graph, k, kPassive);
    e.rule = kFullyActive;
    e.cops = 2 * k;
    e.factory = [graph, table] { return std::make_unique<DoublingAdapter>(graph, std::make_unique<OptimalCop>(table)); };
  } else if (spec.name == "shadow") {
    reject_unknown(spec, {"k"});
    const int k = cops_param(spec, g, ctx, kFullyActive);
    auto table = table_from(ctx, graph, k, kFullyActive);
    e.rule = kPassive;
    e.cops = k + 1;
    e.factory = [graph, table] {
      return std::make_unique<ShadowPassiveAdapter>(graph, std::make_unique<OptimalCop>(table));
    };
  } else if (spec.name == "same-partite") {
    reject_unknown(spec, {"k", "shared"});
    const int k = cops_param(spec, g, ctx, kPassive);
    const SharedSide shared = shared_param(spec, SharedSide::CopTurn);
    auto table = table_from(ctx, graph, k, kPassive);
    SamePartiteAdapter probe(graph, std::make_unique<OptimalCop>(table), shared);
    e.rule = kFullyActive;
    e.cops = k;
    e.factory = [graph, table, shared] {
      return std::make_unique<SamePartiteAdapter>(graph, std::make_unique<OptimalCop>(table), shared);
    };
  } else if (spec.name == "tree-pair") {
    reject_unknown(spec, {"start"});
    auto product = tree_product_of(g, "tree-pair");
    const Vertex start = spec.get_int("start", 0);
    TreePairCop probe(product, start);
    e.rule = kFullyActive;
    e.cops = 1;
    e.factory = [product, start] { return std::make_unique<TreePairCop>(product, start); };
  } else if (spec.name == "tree-product") {
    reject_unknown(spec, {"cops"});
    auto product = tree_product_of(g, "tree-product");
    const int cops = spec.get_int("cops", 0);
    TreeProductCop probe(product, cops);
    e.rule = kFullyActive;
    e.cops = probe.cop_count();
    e.factory = [product, cops] { return std::make_unique<TreeProductCop>(product, cops); };
  } else if (spec.name == "odd-cycle") {
    reject_unknown(spec, {"shared"});
    const auto lengths = cycle_lengths_of(g);
    if (std::none_of(lengths.begin(), lengths.end(), [](int n) { return n % 2 == 1; }))
      throw ParameterError("odd-cycle needs at least one odd cycle length");
    auto map = std::make_shared<const CoveringMap>(doubled_cycle_cover(lengths));
    const int k = static_cast<int>(lengths.size()) + 1;
    auto table = table_from(ctx, std::make_shared<const Graph>(map->source), k, kPassive);
    const SharedSide shared = shared_param(spec, SharedSide::RobberTurn);
    e.rule = kFullyActive;
    e.cops = k;
    e.factory = [lengths, map, table, shared] { return odd_cycle_product_strategy(lengths, map, table, shared); };
  } else {
    std::string names;
    for (const auto& n : cop_controller_names()) names += (names.empty() ? "" : ", ") + n;
    throw UnknownNameError("unknown cop controller \"" + spec.name + "\"; known: " + names);
  }
  return e;
}

RobberEntry make_robber(const std::string& text, const GraphInstance& g, int cops, const CatalogContext& ctx) {
  const ControllerSpec spec = ControllerSpec::parse(text);
  const auto graph = g.graph;
  RobberEntry e;
  e.label = spec.text();
  if (spec.name == "optimal") {
    reject_unknown(spec, {"rule", "k"});
    e.rule = rule_param(spec, ctx, kPassive);
    const int k = spec.get_int("k", cops);
    if (k < 1) throw ParameterError("optimal robber needs k >= 1");
    auto table = table_from(ctx, graph, k, e.rule);
    e.factory = [table] { return std::make_unique<OptimalRobber>(table); };
  } else if (spec.name == "random") {
    reject_unknown(spec, {"rule", "seed"});
    e.rule = rule_param(spec, ctx, kPassive);
    const std::uint64_t seed = static_cast<std::uint64_t>(spec.get_int("seed", static_cast<int>(ctx.seed)));
    e.factory = [graph, rule = e.rule, seed] { return std::make_unique<RandomRobber>(graph, rule, seed); };
  } else if (spec.name == "tree-product-robber") {
    reject_unknown(spec, {});
    auto product = tree_product_of(g, "tree-product-robber");
    e.rule = kFullyActive;
    e.factory = [product] { return std::make_unique<TreeProductRobber>(product); };
  } else if (spec.name == "blowup-robber") {
    reject_unknown(spec, {"k"});
    if (g.kind != "blowup") throw ParameterError("blowup-robber needs a blowup graph, e.g. blowup(4,hypercube:3)");
    auto base = tree_product_of(*g.base, "blowup-robber");
    const int t = g.blowup_t;
    BlowupRobber probe(base, t);
    if (probe.graph() != *graph) throw ParameterError("blowup-robber: the graph does not match its own blowup numbering");
    const int k = spec.get_int("k", probe.half());
    if (k != probe.half())
      throw ParameterError("blowup-robber: k=" + std::to_string(k) + " but the base has " +
                           std::to_string(base->dims()) + " factors (k=" + std::to_string(probe.half()) + ")");
    e.rule = kFullyActive;
    e.factory = [base, t] { return std::make_unique<BlowupRobber>(base, t); };
  } else {
    std::string names;
    for (const auto& n : robber_controller_names()) names += (names.empty() ? "" : ", ") + n;
    throw UnknownNameError("unknown robber controller \"" + spec.name + "\"; known: " + names);
  }
  return e;
}

}  // namespace plab
