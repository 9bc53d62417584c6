#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "plab/catalog.hpp"
#include "plab/graph_io.hpp"
#include "plab/suite.hpp"

using namespace plab;

TEST_CASE("graph specs build the named families") {
  CHECK(*build_graph("cycle:5").graph == cycle_graph(5));
  CHECK(*build_graph("complete-bipartite:2,3").graph == complete_bipartite_graph(2, 3));
  CHECK(*build_graph("hypercube:3").graph == hypercube_graph(3));
  CHECK(build_graph("petersen").graph->vertex_count() == 10);
  CHECK(*build_graph("vab:2,3").graph == vab_graph(2, 3));

  const auto p = build_graph("path:3*cycle:4");
  CHECK(p.kind == "product");
  CHECK(p.factors.size() == 2);
  CHECK(*p.graph == cartesian_product(std::vector<Graph>{path_graph(3), cycle_graph(4)}));

  const auto b = build_graph("blowup(2,path:3)");
  CHECK(b.blowup_t == 2);
  CHECK(*b.graph == blowup(path_graph(3), 2));

  CHECK(build_graph("outerplanar:8,3").embedding.has_value());
  CHECK(*build_graph("tree:9,4").graph == *build_graph("tree:9,4").graph);
}

TEST_CASE("graph specs: errors") {
  CHECK_THROWS_AS(build_graph("dodecahedron"), UnknownNameError);
  CHECK_THROWS_AS(build_graph("cycle:"), ParameterError);
  CHECK_THROWS_AS(build_graph("cycle:5)"), ParameterError);
  CHECK_THROWS_AS(build_graph("blowup(0,path:3)"), ParameterError);
  CHECK_THROWS_AS(build_graph("file:/nonexistent/graph.json"), FormatError);
}

TEST_CASE("graph specs read files") {
  const auto path = std::filesystem::temp_directory_path() / "plab_catalog_test.json";
  save_graph_file(petersen_graph(), path.string());
  CHECK(*build_graph("file:" + path.string()).graph == petersen_graph());
  std::filesystem::remove(path);
}

TEST_CASE("controller specs") {
  const auto s = ControllerSpec::parse("optimal:rule=passive,k=2");
  CHECK(s.name == "optimal");
  CHECK(s.get("rule") == "passive");
  CHECK(s.get_int("k", 0) == 2);
  CHECK(s.get_int("missing", 7) == 7);
  CHECK(ControllerSpec::parse(s.text()).params == s.params);
  CHECK_THROWS_AS(ControllerSpec::parse("optimal:k"), ParameterError);
  CHECK_THROWS_AS(ControllerSpec::parse("optimal:k=x").get_int("k", 0), ParameterError);
}

TEST_CASE("controllers by name") {
  CatalogContext ctx;
  const auto c5 = build_graph("cycle:5");
  const auto cop = make_cop("optimal:rule=fully-active,k=2", c5, ctx);
  CHECK(cop.cops == 2);
  CHECK(cop.rule == kFullyActive);
  CHECK(exhaustive_verify_cop(*c5.graph, cop.rule, cop.factory).verified);

  // k defaults to the cop number under the controller's rule.
  CHECK(make_cop("doubling", c5, ctx).cops == 4);

  const auto q3 = build_graph("hypercube:3");
  const auto robber = make_robber("tree-product-robber", q3, 1, ctx);
  CHECK(exhaustive_verify_robber(*q3.graph, robber.rule, 1, robber.factory).verified);

  CHECK_THROWS_AS(make_cop("teleporter", c5, ctx), UnknownNameError);
  CHECK_THROWS_AS(make_robber("teleporter", c5, 1, ctx), UnknownNameError);
  CHECK_THROWS_AS(make_cop("optimal:speed=3", c5, ctx), ParameterError);
  CHECK_THROWS_AS(make_cop("optimal:rule=sideways", c5, ctx), ParameterError);
  CHECK_THROWS_AS(make_cop("outerplanar", build_graph("complete:4"), ctx), ParameterError);
  CHECK_THROWS_AS(make_cop("tree-product", c5, ctx), ParameterError);
  CHECK_THROWS_AS(make_robber("blowup-robber", c5, 3, ctx), ParameterError);
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
  SuiteConfig cfg;
  cfg.only = {1, 3, 13};
  cfg.seed = 5;
  const auto a = run_paper_suite(cfg);
  const auto b = run_paper_suite(cfg);
  CHECK(a.passed());
  CHECK(a.criterion_verdict(2) == Verdict::Skipped);
  CHECK(a.to_markdown() == b.to_markdown());
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json().dump() == b.to_json().dump());
  for (const auto& r : a.records) {
    CHECK_FALSE(r.anchor.empty());
    CHECK((r.verdict == Verdict::Pass) == (r.expected == r.computed));
  }
  cfg.seed = 6;
  CHECK(run_paper_suite(cfg).to_csv() != a.to_csv());
}

TEST_CASE("suite report files") {
  SuiteConfig cfg;
  cfg.only = {3};
  const auto report = run_paper_suite(cfg);
  const auto dir = std::filesystem::temp_directory_path() / "plab_report_test";
  std::filesystem::remove_all(dir);
  write_report(report, dir.string());
  for (const char* name : {"report.md", "report.csv", "report.json"}) CHECK(std::filesystem::exists(dir / name));
  std::ifstream json(dir / "report.json");
  const auto j = nlohmann::json::parse(json);
  CHECK(j["checks"].size() == report.records.size());
  CHECK(j["checks"][0].count("seconds") == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("heavy checks are skipped unless asked for") {
  SuiteConfig cfg;
  cfg.only = {6};
  const auto report = run_paper_suite(cfg);
  CHECK(report.criterion_verdict(6) == Verdict::Skipped);
}
