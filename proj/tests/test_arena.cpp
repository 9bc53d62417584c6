#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "plab/arena.hpp"
#include "plab/generators.hpp"
#include "plab/optimal.hpp"

using namespace plab;

namespace {

std::shared_ptr<const SolveTable> table_for(const Graph& g, int k, MovementRule rule) {
  return std::make_shared<const SolveTable>(solve(g, k, rule));
}

std::vector<std::vector<Vertex>> all_placements(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  const MultisetIndexer ms(n, k);
  for (std::uint64_t r = 0; r < ms.count(k); ++r) {
    auto c = ms.unrank(k, r);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

// Scripted robber for play tests.
class WalkRobber : public RobberStrategy {
 public:
  WalkRobber(Vertex start, std::vector<Vertex> path) : pos_(start), path_(std::move(path)) {}
  std::string name() const override { return "walk"; }
  MovementRule rule() const override { return kPassive; }
  Vertex place(std::span<const Vertex>) override { return pos_; }
  Vertex respond(std::span<const Vertex>) override {
    if (i_ < path_.size()) pos_ = path_[i_++];
    return pos_;
  }
  std::string memo_key() const override { return KeyBuilder().add(pos_).add(static_cast<std::int64_t>(i_)).str(); }
  std::unique_ptr<RobberStrategy> clone() const override { return std::make_unique<WalkRobber>(*this); }

 private:
  Vertex pos_;
  std::vector<Vertex> path_;
  std::size_t i_ = 0;
};

}  // namespace

TEST_CASE("play: optimal vs optimal on small instances") {
  SUBCASE("P3 passive, one cop: capture within 2 rounds") {
    auto t = table_for(path_graph(3), 1, kPassive);
    OptimalCop c(t);
    OptimalRobber r(t);
    const Transcript tr = play(path_graph(3), kPassive, c, r, 50);
    CHECK(tr.outcome == Outcome::Capture);
    CHECK(tr.outcome_round <= 2);
  }
  SUBCASE("C4 fully active, one cop: robber survives to the bound") {
    const Graph g = cycle_graph(4);
    auto t = table_for(g, 1, kFullyActive);
    OptimalCop c(t);
    OptimalRobber r(t);
    const Transcript tr = play(g, kFullyActive, c, r, 40);
    CHECK(tr.outcome == Outcome::Survived);
    CHECK(tr.outcome_round == 40);
    CHECK(tr.rounds.size() == 40);
  }
  SUBCASE("optimal capture round matches the table") {
    const Graph g = petersen_graph();
    auto t = table_for(g, 3, kPassive);
    OptimalCop c(t);
    OptimalRobber r(t);
    const Transcript tr = play(g, kPassive, c, r, 100);
    REQUIRE(tr.outcome == Outcome::Capture);
    const auto st = t->space().round_start(tr.cop_placement, tr.robber_placement);
    // capture_time counts individual moves: k per cop round plus one per robber move
    const int plies = t->capture_time(st);
    CHECK(tr.outcome_round == (plies + 3) / 4);
  }
}

TEST_CASE("play: illegal moves mark the transcript invalid") {
  const Graph g = path_graph(4);
  auto t = table_for(g, 1, kPassive);
  OptimalCop c(t, std::vector<Vertex>{0});
  WalkRobber r(3, {1});  // 3 -> 1 is a jump
  const Transcript tr = play(g, kPassive, c, r, 10);
  CHECK(tr.outcome == Outcome::Invalid);
  CHECK(tr.culprit == "robber");
  const auto j = tr.to_json();
  CHECK(j["outcome"]["type"] == "INVALID");
}

TEST_CASE("play: fully active robber may not pass") {
  const Graph g = cycle_graph(6);
  auto t = table_for(g, 1, kFullyActive);
  OptimalCop c(t, std::vector<Vertex>{0});
  WalkRobber r(3, {3});
  const Transcript tr = play(g, kFullyActive, c, r, 10);
  CHECK(tr.outcome == Outcome::Invalid);
}

TEST_CASE("arena agrees with the solver on every initial configuration") {
  std::vector<Graph> corpus = {path_graph(3), cycle_graph(4), cycle_graph(5), complete_graph(3),
                               complete_bipartite_graph(2, 3), fan_graph(5)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) corpus.push_back(random_connected(4 + seed % 3, 0.45, seed));
  for (const Graph& g : corpus) {
    const int n = g.vertex_count();
    for (const MovementRule rule : kAllRules) {
      for (int k = 1; k <= 2; ++k) {
        auto t = table_for(g, k, rule);
        for (const auto& p : all_placements(n, k)) {
          for (Vertex y = 0; y < n; ++y) {
            const bool cop_win = t->cops_win_initial(p, y);
            VerifyCopOptions co;
            co.robber_starts = std::vector<Vertex>{y};
            co.round_bound = 4 * n * n;
            const auto vc = exhaustive_verify_cop(
                g, rule, [&] { return std::make_unique<OptimalCop>(t, p); }, co);
            VerifyRobberOptions ro;
            ro.placements = std::vector<std::vector<Vertex>>{p};
            const auto vr =
                exhaustive_verify_robber(g, rule, k, [&] { return std::make_unique<OptimalRobber>(t, y); }, ro);
            INFO("n=", n, " rule=", rule.name(), " k=", k, " y=", y);
            CHECK(vc.verified == cop_win);
            CHECK(vr.verified == !cop_win);
            if (!vc.verified) CHECK(vc.counterexample.has_value());
            if (!vr.verified) REQUIRE(vr.counterexample.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("arena verdicts do not depend on memoization") {
  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    const Graph g = random_connected(5, 0.5, seed);
    for (const MovementRule rule : kAllRules) {
      auto t = table_for(g, 1, rule);
      for (const auto& p : all_placements(5, 1)) {
        for (Vertex y = 0; y < 5; ++y) {
          VerifyCopOptions a;
          a.robber_starts = std::vector<Vertex>{y};
          a.round_bound = 12;
          VerifyCopOptions b = a;
          b.memoize = false;
          auto f = [&] { return std::make_unique<OptimalCop>(t, p); };
          CHECK(exhaustive_verify_cop(g, rule, f, a).verified == exhaustive_verify_cop(g, rule, f, b).verified);

          VerifyRobberOptions ra;
          ra.placements = std::vector<std::vector<Vertex>>{p};
          VerifyRobberOptions rb = ra;
          rb.memoize = false;
          rb.round_bound = 12;
          auto fr = [&] { return std::make_unique<OptimalRobber>(t, y); };
          CHECK(exhaustive_verify_robber(g, rule, 1, fr, ra).verified ==
                exhaustive_verify_robber(g, rule, 1, fr, rb).verified);
        }
      }
    }
  }
}

namespace {

// Behaves differently from equal memo keys.
class LyingCop : public CopStrategy {
 public:
  explicit LyingCop(std::shared_ptr<int> calls) : calls_(std::move(calls)) {}
  std::string name() const override { return "liar"; }
  int cop_count() const override { return 1; }
  MovementRule rule() const override { return kPassive; }
  std::vector<Vertex> place() override { return {0}; }
  std::vector<Vertex> respond(Vertex) override { return {++*calls_ % 2 == 0 ? 0 : 1}; }
  std::string memo_key() const override { return {}; }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<LyingCop>(*this); }

 private:
  std::shared_ptr<int> calls_;
};

}  // namespace

TEST_CASE("cop verification reports determinism faults and bound overruns") {
  const Graph g = path_graph(6);
  auto calls = std::make_shared<int>(0);
  const auto r = exhaustive_verify_cop(g, kPassive, [&] { return std::make_unique<LyingCop>(calls); });
  CHECK_FALSE(r.verified);
  REQUIRE(r.counterexample.has_value());

  auto t = table_for(cycle_graph(4), 1, kPassive);
  VerifyCopOptions o;
  o.round_bound = 3;
  const auto lost = exhaustive_verify_cop(cycle_graph(4), kPassive, [&] { return std::make_unique<OptimalCop>(t); }, o);
  CHECK_FALSE(lost.verified);
  REQUIRE(lost.counterexample.has_value());
  CHECK(lost.counterexample->outcome != Outcome::Capture);
}

TEST_CASE("transcripts round-trip to disk") {
  auto t = table_for(path_graph(3), 1, kPassive);
  OptimalCop c(t);
  OptimalRobber r(t);
  const Transcript tr = play(path_graph(3), kPassive, c, r, 10, "path:3");
  const auto dir = std::filesystem::temp_directory_path() / "plab_transcript_test";
  const auto path = write_transcript(tr, dir, "game");
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["graph"] == "path:3");
  CHECK(j["outcome"]["type"] == "CAPTURE");
  CHECK(j["rule"] == "passive");
  std::filesystem::remove_all(dir);
}
