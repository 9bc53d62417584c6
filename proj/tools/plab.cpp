// plab: command-line front end for the solver, the arena and the suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "plab/arena.hpp"
#include "plab/catalog.hpp"
#include "plab/graph_io.hpp"
#include "plab/solver.hpp"
#include "plab/suite.hpp"
#include "plab/table_cache.hpp"

using namespace plab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Graph selection shared by every subcommand that reads a graph.
struct GraphArgs {
  std::string spec;
  std::string family;
  std::vector<int> sizes;
  std::string file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph,--spec", spec, "graph spec, e.g. cycle:5, path:3*path:4, blowup(4,hypercube:3)");
    cmd->add_option("--family", family, "graph family (with --n and, for complete-bipartite, --m)");
    cmd->add_option("--n", sizes, "family size parameter")->expected(1);
    cmd->add_option("--m", second, "second family size parameter");
    cmd->add_option("--file", file, "graph file (.json or edge list)");
  }

  GraphInstance build() const {
    const int given = !spec.empty() + !family.empty() + !file.empty();
    if (given != 1) throw ParameterError("give exactly one of --graph, --family or --file");
    if (!file.empty()) return build_graph("file:" + file);
    if (!spec.empty()) return build_graph(spec);
    std::string text = family;
    if (!sizes.empty()) text += ":" + std::to_string(sizes.front());
    if (second) text += "," + std::to_string(*second);
    return build_graph(text);
  }

  std::optional<int> second;
};

MovementRule rule_from(const std::string& text) {
  const auto rule = parse_rule(text);
  if (!rule) throw ParameterError("unknown rule \"" + text + "\"; known: passive, fully-active, active, lazy");
  return *rule;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw FormatError("cannot write " + out);
  f << text;
}

std::string graph_text(const Graph& g, const std::string& format) {
  if (format == "json") return graph_to_json(g).dump(2) + "\n";
  if (format == "edges") return graph_to_edge_list(g);
  throw ParameterError("unknown format \"" + format + "\"; known: json, edges");
}

std::optional<std::string> optional_flag(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

void print_warnings(const TableCache& cache) {
  for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << "\n";
}

std::string placement_text(const std::vector<Vertex>& cops) {
  std::string s;
  for (Vertex v : cops) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plab: cops and robber games with passive and active cops"};
  app.require_subcommand(1);
  app.set_version_flag("--version", plab_version());

  // ---- graph ----
  auto* graph_cmd = app.add_subcommand("graph", "build or convert graphs")->require_subcommand(1);
  GraphArgs build_args;
  std::string format = "json", out, input;
  auto* build_cmd = graph_cmd->add_subcommand("build", "build a graph from a spec or family");
  build_args.add_to(build_cmd);
  build_cmd->add_option("--format", format, "json or edges");
  build_cmd->add_option("--out", out, "output file (default stdout)");
  auto* convert_cmd = graph_cmd->add_subcommand("convert", "convert a graph file between formats");
  convert_cmd->add_option("--in", input, "input file (.json or edge list)")->required();
  convert_cmd->add_option("--format", format, "json or edges");
  convert_cmd->add_option("--out", out, "output file (default stdout)");

  // ---- solve ----
  GraphArgs solve_args;
  std::string rule_text = "passive", cache_dir;
  int cops = 0, max_cops = 0;
  auto* solve_cmd = app.add_subcommand("solve", "solve a game exactly");
  solve_args.add_to(solve_cmd);
  solve_cmd->add_option("--rule", rule_text, "passive, fully-active, active or lazy");
  auto* cops_opt = solve_cmd->add_option("--cops", cops, "decide whether this many cops win");
  solve_cmd->add_option("--max-cops", max_cops, "print the cop number, searching up to this many cops")
      ->excludes(cops_opt);
  solve_cmd->add_option("--cache-dir", cache_dir, "table cache (default $PLAB_CACHE_DIR or ./plab-cache)");

  // ---- arena ----
  auto* arena_cmd = app.add_subcommand("arena", "play or verify named controllers")->require_subcommand(1);
  GraphArgs arena_args;
  std::string cop_text, robber_text, artifacts_dir, arena_rule;
  int arena_cops = 0, rounds = 0, bound = 0;
  bool no_memo = false;
  std::uint64_t arena_seed = 0;
  auto add_arena_common = [&](CLI::App* cmd) {
    arena_args.add_to(cmd);
    cmd->add_option("--rule", arena_rule, "default rule for controllers that take rule=");
    cmd->add_option("--seed", arena_seed, "seed for randomized controllers");
    cmd->add_option("--cache-dir", cache_dir, "table cache (default $PLAB_CACHE_DIR or ./plab-cache)");
    cmd->add_option("--artifacts-dir", artifacts_dir, "write transcripts and counterexamples here");
  };
  auto* play_cmd = arena_cmd->add_subcommand("play", "play one game");
  add_arena_common(play_cmd);
  play_cmd->add_option("--cop", cop_text, "cop controller, e.g. optimal:rule=passive,k=2")->required();
  play_cmd->add_option("--robber", robber_text, "robber controller, e.g. random:seed=3")->required();
  play_cmd->add_option("--rounds", rounds, "round bound (default 20 n^2)");
  auto* vcop_cmd = arena_cmd->add_subcommand("verify-cop", "check a cop controller against every robber");
  add_arena_common(vcop_cmd);
  vcop_cmd->add_option("--cop", cop_text, "cop controller")->required();
  vcop_cmd->add_option("--bound", bound, "round bound (default 20 n^2)");
  vcop_cmd->add_flag("--no-memo", no_memo, "explore the full game tree without memoization");
  auto* vrob_cmd = arena_cmd->add_subcommand("verify-robber", "check a robber controller against every cop team");
  add_arena_common(vrob_cmd);
  vrob_cmd->add_option("--robber", robber_text, "robber controller")->required();
  vrob_cmd->add_option("--cops", arena_cops, "number of cops")->required();
  vrob_cmd->add_flag("--no-memo", no_memo, "explore without memoization");
  vrob_cmd->add_option("--bound", bound, "round bound without memoization (default 4 n)");

  // ---- verify ----
  std::string suite = "paper", report_dir = "plab-report";
  bool heavy = false, timings = false, quiet = false;
  std::uint64_t suite_seed = 1;
  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify", "run the reproduction suite");
  verify_cmd->add_option("--suite", suite, "suite name (paper)")->required();
  verify_cmd->add_flag("--heavy", heavy, "include the 32-vertex blowup instance");
  verify_cmd->add_option("--out", report_dir, "report directory");
  verify_cmd->add_option("--seed", suite_seed, "seed for the random instances");
  verify_cmd->add_option("--only", only, "run only these criteria")->delimiter(',');
  verify_cmd->add_flag("--timings", timings, "include runtimes in the reports");
  verify_cmd->add_flag("--quiet", quiet, "print only the summary");
  verify_cmd->add_option("--cache-dir", cache_dir, "table cache (default $PLAB_CACHE_DIR or ./plab-cache)");

  // ---- cache ----
  auto* cache_cmd = app.add_subcommand("cache", "inspect the table cache")->require_subcommand(1);
  auto* ls_cmd = cache_cmd->add_subcommand("ls", "list cached tables");
  auto* rm_cmd = cache_cmd->add_subcommand("rm", "delete every cached table");
  for (auto* c : {ls_cmd, rm_cmd})
    c->add_option("--cache-dir", cache_dir, "table cache (default $PLAB_CACHE_DIR or ./plab-cache)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (build_cmd->parsed()) {
      const GraphInstance g = build_args.build();
      emit(graph_text(*g.graph, format), out);
      return 0;
    }
    if (convert_cmd->parsed()) {
      emit(graph_text(load_graph_file(input), format), out);
      return 0;
    }

    if (solve_cmd->parsed()) {
      const MovementRule rule = rule_from(rule_text);
      const GraphInstance g = solve_args.build();
      TableCache cache(TableCache::resolve_dir(optional_flag(cache_dir)));
      if (cops > 0) {
        const auto t = cache.get_or_solve(g.graph, cops, rule);
        print_warnings(cache);
        const auto win = t->first_winning_placement();
        if (win) std::cout << "cops win from " << placement_text(*win) << "\n";
        else std::cout << "robber wins\n";
        return 0;
      }
      if (max_cops <= 0) throw ParameterError("give --cops K or --max-cops K");
      const auto c = cop_number(*g.graph, rule, max_cops, &cache);
      print_warnings(cache);
      std::cout << (c ? std::to_string(*c) : ">" + std::to_string(max_cops)) << "\n";
      return 0;
    }

    if (play_cmd->parsed() || vcop_cmd->parsed() || vrob_cmd->parsed()) {
      const GraphInstance g = arena_args.build();
      TableCache cache(TableCache::resolve_dir(optional_flag(cache_dir)));
      CatalogContext ctx{&cache, arena_seed, {}};
      if (!arena_rule.empty()) ctx.rule = rule_from(arena_rule);
      const int n = g.graph->vertex_count();

      if (play_cmd->parsed()) {
        const CopEntry cop = make_cop(cop_text, g, ctx);
        ctx.rule = cop.rule;
        const RobberEntry robber = make_robber(robber_text, g, cop.cops, ctx);
        if (!(robber.rule == cop.rule))
          throw ParameterError("cop controller plays " + cop.rule.name() + " but robber controller plays " +
                               robber.rule.name());
        auto c = cop.factory();
        auto r = robber.factory();
        Transcript t = play(*g.graph, cop.rule, *c, *r, rounds > 0 ? rounds : 20 * n * n, g.id);
        t.seed = arena_seed;
        std::cout << outcome_name(t.outcome) << " after " << t.outcome_round << " rounds";
        if (!t.reason.empty()) std::cout << " (" << t.reason << ")";
        std::cout << "\n";
        if (!artifacts_dir.empty()) std::cout << write_transcript(t, artifacts_dir, "game").string() << "\n";
        print_warnings(cache);
        return t.outcome == Outcome::Invalid ? kExitFail : 0;
      }

      if (vcop_cmd->parsed()) {
        const CopEntry cop = make_cop(cop_text, g, ctx);
        VerifyCopOptions o;
        o.round_bound = bound;
        o.memoize = !no_memo;
        o.graph_id = g.id;
        const VerifyResult r = exhaustive_verify_cop(*g.graph, cop.rule, cop.factory, o);
        print_warnings(cache);
        std::cout << (r.verified ? "VERIFIED" : "REFUTED") << ": " << cop.label << " with " << cop.cops << " cops ("
                  << cop.rule.name() << "), " << r.nodes << " nodes, worst " << r.worst_rounds << " rounds\n";
        if (!r.message.empty()) std::cout << r.message << "\n";
        if (r.counterexample && !artifacts_dir.empty())
          std::cout << write_transcript(*r.counterexample, artifacts_dir, "counterexample").string() << "\n";
        return r.verified ? 0 : kExitFail;
      }

      const RobberEntry robber = make_robber(robber_text, g, arena_cops, ctx);
      VerifyRobberOptions o;
      o.memoize = !no_memo;
      o.round_bound = bound;
      o.graph_id = g.id;
      const VerifyResult r = exhaustive_verify_robber(*g.graph, robber.rule, arena_cops, robber.factory, o);
      print_warnings(cache);
      std::cout << (r.verified ? "VERIFIED" : "REFUTED") << ": " << robber.label << " against " << arena_cops
                << " cops (" << robber.rule.name() << "), " << r.nodes << " nodes\n";
      if (!r.message.empty()) std::cout << r.message << "\n";
      if (r.counterexample && !artifacts_dir.empty())
        std::cout << write_transcript(*r.counterexample, artifacts_dir, "counterexample").string() << "\n";
      return r.verified ? 0 : kExitFail;
    }

    if (verify_cmd->parsed()) {
      if (suite != "paper") throw UnknownNameError("unknown suite \"" + suite + "\"; known: paper");
      for (int c : only)
        if (c < 1 || c > kCriteria) throw ParameterError("--only takes criteria 1.." + std::to_string(kCriteria));
      TableCache cache(TableCache::resolve_dir(optional_flag(cache_dir)));
      SuiteConfig cfg;
      cfg.heavy = heavy;
      cfg.seed = suite_seed;
      cfg.cache = &cache;
      cfg.only = only;
      if (!quiet)
        cfg.progress = [](const CheckRecord& r) {
          std::cout << verdict_name(r.verdict) << "  " << r.id << "  " << r.instance << "\n" << std::flush;
        };
      const SuiteReport report = run_paper_suite(cfg);
      write_report(report, report_dir, timings);
      print_warnings(cache);
      for (int c = 1; c <= kCriteria; ++c)
        std::cout << "criterion " << c << ": " << verdict_name(report.criterion_verdict(c)) << "\n";
      std::cout << report.count(Verdict::Pass) << " passed, " << report.count(Verdict::Fail) << " failed, "
                << report.count(Verdict::Skipped) << " skipped; report in " << report_dir << "\n";
      return report.passed() ? 0 : kExitFail;
    }

    if (ls_cmd->parsed() || rm_cmd->parsed()) {
      TableCache cache(TableCache::resolve_dir(optional_flag(cache_dir)));
      if (rm_cmd->parsed()) {
        std::cout << "removed " << cache.clear() << " tables from " << cache.dir().string() << "\n";
        return 0;
      }
      for (const auto& e : cache.list()) std::cout << e.bytes << "\t" << e.path.filename().string() << "\n";
      return 0;
    }
  } catch (const UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CacheFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
