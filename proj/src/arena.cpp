#include "plab/arena.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "plab/multiset.hpp"

namespace plab {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Capture: return "CAPTURE";
    case Outcome::Survived: return "SURVIVED";
    case Outcome::CycleProven: return "CYCLE_PROVEN";
    case Outcome::Invalid: return "INVALID";
  }
  return "?";
}

nlohmann::json Transcript::to_json() const {
  nlohmann::json j;
  j["graph"] = graph_id;
  j["rule"] = rule.name();
  j["cops"] = cops;
  j["cop_controller"] = cop_controller;
  j["robber_controller"] = robber_controller;
  j["seed"] = seed;
  j["cop_placement"] = cop_placement;
  j["robber_placement"] = robber_placement;
  auto& rs = j["rounds"] = nlohmann::json::array();
  for (const auto& r : rounds) {
    nlohmann::json e;
    e["cops"] = r.cops;
    if (r.robber >= 0) e["robber"] = r.robber;
    rs.push_back(std::move(e));
  }
  j["outcome"] = {{"type", outcome_name(outcome)}, {"round", outcome_round}};
  if (outcome == Outcome::Invalid) {
    j["outcome"]["culprit"] = culprit;
    j["outcome"]["reason"] = reason;
  } else if (!reason.empty()) {
    j["outcome"]["note"] = reason;
  }
  return j;
}

std::filesystem::path write_transcript(const Transcript& t, const std::filesystem::path& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  const auto path = dir / (stem + ".json");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << t.to_json().dump(1) << '\n';
  return path;
}

namespace {

bool contains(std::span<const Vertex> xs, Vertex v) { return std::find(xs.begin(), xs.end(), v) != xs.end(); }

std::vector<Vertex> sorted_copy(std::span<const Vertex> xs) {
  std::vector<Vertex> s(xs.begin(), xs.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Vertex> robber_options(const Graph& g, MovementRule rule, Vertex r) {
  std::vector<Vertex> out;
  if (rule.robber_may_stay()) out.push_back(r);
  for (Vertex w : g.neighbors(r)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

// Every multiset a legal joint cop move can produce, lexicographic.
std::vector<std::vector<Vertex>> joint_outcomes(const Graph& g, MovementRule rule, std::span<const Vertex> cops) {
  const int k = static_cast<int>(cops.size());
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur(k);
  auto rec = [&](auto&& self, int i, bool any_moved) -> void {
    if (i == k) {
      out.push_back(sorted_copy(cur));
      return;
    }
    const bool last = i + 1 == k;
    const Vertex p = cops[i];
    if (micro_move_legal(rule.cop, last, any_moved, false)) {
      cur[i] = p;
      self(self, i + 1, any_moved);
    }
    if (micro_move_legal(rule.cop, last, any_moved, true))
      for (Vertex w : g.neighbors(p)) {
        cur[i] = w;
        self(self, i + 1, true);
      }
  };
  rec(rec, 0, false);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Transcript make_transcript(const Graph& g, MovementRule rule, int cops, const std::string& graph_id) {
  Transcript t;
  t.graph_id = graph_id.empty() ? "n" + std::to_string(g.vertex_count()) : graph_id;
  t.rule = rule;
  t.cops = cops;
  return t;
}

}  // namespace

Transcript play(const Graph& g, MovementRule rule, CopStrategy& cops, RobberStrategy& robber, int round_bound,
                std::string graph_id) {
  Transcript t = make_transcript(g, rule, cops.cop_count(), graph_id);
  t.cop_controller = cops.name();
  t.robber_controller = robber.name();
  const int n = g.vertex_count();
  auto invalid = [&](std::string culprit, std::string reason, int round) {
    t.outcome = Outcome::Invalid;
    t.culprit = std::move(culprit);
    t.reason = std::move(reason);
    t.outcome_round = round;
    return t;
  };

  std::vector<Vertex> pos;
  try {
    pos = cops.place();
  } catch (const std::exception& e) {
    return invalid("cops", e.what(), 0);
  }
  t.cop_placement = pos;
  if (static_cast<int>(pos.size()) != cops.cop_count()) return invalid("cops", "placement has wrong size", 0);
  for (Vertex v : pos)
    if (v < 0 || v >= n) return invalid("cops", "placement vertex out of range", 0);

  Vertex y;
  try {
    y = robber.place(sorted_copy(pos));
  } catch (const std::exception& e) {
    return invalid("robber", e.what(), 0);
  }
  t.robber_placement = y;
  if (y < 0 || y >= n) return invalid("robber", "placement vertex out of range", 0);
  if (contains(pos, y)) {
    t.outcome = Outcome::Capture;
    t.outcome_round = 0;
    return t;
  }

  for (int round = 1; round <= round_bound; ++round) {
    std::vector<Vertex> next;
    try {
      next = cops.respond(y);
    } catch (const std::exception& e) {
      return invalid("cops", e.what(), round);
    }
    std::string why;
    if (!legal_cop_round(g, rule, pos, next, &why)) return invalid("cops", why, round);
    pos = std::move(next);
    t.rounds.push_back({pos, -1});
    if (contains(pos, y)) {
      t.outcome = Outcome::Capture;
      t.outcome_round = round;
      return t;
    }
    Vertex to;
    try {
      to = robber.respond(sorted_copy(pos));
    } catch (const std::exception& e) {
      return invalid("robber", e.what(), round);
    }
    if (!legal_robber_move(g, rule, y, to, &why)) return invalid("robber", why, round);
    y = to;
    t.rounds.back().robber = y;
    if (contains(pos, y)) {
      t.outcome = Outcome::Capture;
      t.outcome_round = round;
      return t;
    }
  }
  t.outcome = Outcome::Survived;
  t.outcome_round = round_bound;
  return t;
}

// ---- cop verification ------------------------------------------------------

namespace {

struct CopMemo {
  int value = 0;  // rounds until capture against the worst robber
  Vertex worst_move = -1;
  std::string fingerprint;
};

struct CopFrame {
  std::string key;
  std::unique_ptr<CopStrategy> ctrl;  // after responding
  std::vector<Vertex> cops;           // after responding
  std::vector<Vertex> moves;
  std::size_t next = 0;
  int best = 1;
  Vertex best_move = -1;
  std::string fingerprint;
};

class CopVerifier {
 public:
  CopVerifier(const Graph& g, MovementRule rule, const CopFactory& factory, const VerifyCopOptions& opt)
      : g_(g), rule_(rule), factory_(factory), opt_(opt) {
    bound_ = opt.round_bound > 0 ? opt.round_bound : 20 * g.vertex_count() * g.vertex_count();
  }

  VerifyResult run() {
    auto proto = factory_();
    if (!proto) throw std::invalid_argument("cop factory returned null");
    result_.verified = true;
    std::vector<Vertex> placement;
    try {
      placement = proto->place();
    } catch (const std::exception& e) {
      return fail_at_root(Outcome::Invalid, std::string("placement failed: ") + e.what(), {}, -1);
    }
    const int n = g_.vertex_count();
    if (static_cast<int>(placement.size()) != proto->cop_count())
      return fail_at_root(Outcome::Invalid, "placement has wrong size", placement, -1);
    for (Vertex v : placement)
      if (v < 0 || v >= n) return fail_at_root(Outcome::Invalid, "placement vertex out of range", placement, -1);
    placement_ = placement;
    cop_name_ = proto->name();

    std::vector<Vertex> starts;
    if (opt_.robber_starts) {
      starts = *opt_.robber_starts;
    } else {
      for (Vertex y = 0; y < n; ++y) starts.push_back(y);
    }
    for (Vertex y : starts) {
      if (y < 0 || y >= n) throw ParameterError("robber start out of range");
      if (contains(placement, y)) continue;
      start_ = y;
      if (!explore(*proto, placement, y)) return result_;
    }
    result_.message = "verified: capture within " + std::to_string(result_.worst_rounds) + " rounds from every branch";
    return result_;
  }

 private:
  enum class Step { Value, Pushed, Fail };

  static std::string fingerprint(std::span<const Vertex> cops, const CopStrategy& after) {
    return KeyBuilder().add(cops).add(after.memo_key()).str();
  }

  Step enter(const CopStrategy& before, const std::vector<Vertex>& cops_before, Vertex r, int depth, int& value) {
    ++result_.nodes;
    std::string key = KeyBuilder().add(before.memo_key()).add(cops_before).add(r).str();
    if (on_stack_.count(key)) {
      fail(Outcome::CycleProven, "robber forces a repeated position (cycle)", r);
      return Step::Fail;
    }
    if (opt_.memoize) {
      if (auto it = memo_.find(key); it != memo_.end()) {
        if (opt_.check_determinism) {
          auto probe = before.clone();
          std::vector<Vertex> np;
          try {
            np = probe->respond(r);
          } catch (const std::exception& e) {
            fail(Outcome::Invalid, std::string("determinism fault: ") + e.what(), r);
            return Step::Fail;
          }
          if (fingerprint(np, *probe) != it->second.fingerprint) {
            fail(Outcome::Invalid, "determinism fault: equal memo keys, divergent behavior", r);
            return Step::Fail;
          }
        }
        value = it->second.value;
        if (depth + value > bound_) {
          fail(Outcome::Survived, "round bound exceeded", r);
          extend_from_memo(before, cops_before, r);
          return Step::Fail;
        }
        return Step::Value;
      }
    }
    if (depth + 1 > bound_) {
      fail(Outcome::Survived, "round bound exceeded", r);
      return Step::Fail;
    }
    auto ctrl = before.clone();
    std::vector<Vertex> np;
    try {
      np = ctrl->respond(r);
    } catch (const std::exception& e) {
      fail(Outcome::Invalid, e.what(), r);
      return Step::Fail;
    }
    std::string why;
    if (!legal_cop_round(g_, rule_, cops_before, np, &why)) {
      fail(Outcome::Invalid, "illegal cop round: " + why, r);
      return Step::Fail;
    }
    std::string fp = fingerprint(np, *ctrl);
    if (contains(np, r)) {
      value = 1;
      if (opt_.memoize) memo_.emplace(std::move(key), CopMemo{1, -1, std::move(fp)});
      return Step::Value;
    }
    CopFrame f;
    f.key = std::move(key);
    f.ctrl = std::move(ctrl);
    f.cops = std::move(np);
    for (Vertex m : robber_options(g_, rule_, r))
      if (!contains(f.cops, m)) f.moves.push_back(m);
    f.fingerprint = std::move(fp);
    on_stack_.insert(f.key);
    stack_.push_back(std::move(f));
    return Step::Pushed;
  }

  bool explore(const CopStrategy& root, const std::vector<Vertex>& placement, Vertex y) {
    int value = 0;
    switch (enter(root, placement, y, 0, value)) {
      case Step::Fail: return false;
      case Step::Value: result_.worst_rounds = std::max(result_.worst_rounds, value); return true;
      case Step::Pushed: break;
    }
    while (!stack_.empty()) {
      CopFrame& top = stack_.back();
      if (top.next < top.moves.size()) {
        const Vertex m = top.moves[top.next++];
        int v = 0;
        const int depth = static_cast<int>(stack_.size());
        const Step s = enter(*top.ctrl, top.cops, m, depth, v);
        if (s == Step::Fail) return false;
        if (s == Step::Value) {
          CopFrame& again = stack_.back();
          if (1 + v > again.best) {
            again.best = 1 + v;
            again.best_move = m;
          }
        }
        continue;
      }
      CopFrame done = std::move(stack_.back());
      stack_.pop_back();
      on_stack_.erase(done.key);
      if (opt_.memoize) memo_.emplace(done.key, CopMemo{done.best, done.best_move, done.fingerprint});
      if (stack_.empty()) {
        result_.worst_rounds = std::max(result_.worst_rounds, done.best);
      } else {
        CopFrame& parent = stack_.back();
        const Vertex m = parent.moves[parent.next - 1];
        if (1 + done.best > parent.best) {
          parent.best = 1 + done.best;
          parent.best_move = m;
        }
      }
    }
    return true;
  }

  // Path from the root to the current frontier; `last` is the robber move
  // being examined when the failure occurred.
  void fail(Outcome outcome, std::string reason, Vertex /*last*/) {
    result_.verified = false;
    Transcript t = make_transcript(g_, rule_, static_cast<int>(placement_.size()), opt_.graph_id);
    t.cop_controller = cop_name_;
    t.robber_controller = "exhaustive-adversary";
    t.cop_placement = placement_;
    t.robber_placement = start_;
    for (const CopFrame& f : stack_) t.rounds.push_back({f.cops, f.moves[f.next - 1]});
    t.outcome = outcome;
    t.outcome_round = outcome == Outcome::Survived ? bound_ : static_cast<int>(t.rounds.size());
    if (outcome == Outcome::Invalid) t.culprit = "cops";
    t.reason = reason;
    result_.message = std::move(reason);
    result_.counterexample = std::move(t);
  }

  VerifyResult fail_at_root(Outcome outcome, std::string reason, std::vector<Vertex> placement, Vertex y) {
    placement_ = std::move(placement);
    start_ = y;
    fail(outcome, std::move(reason), -1);
    return result_;
  }

  // Follow memoized worst moves so the counterexample shows the long branch.
  void extend_from_memo(const CopStrategy& before, std::vector<Vertex> cops, Vertex r) {
    auto ctrl = before.clone();
    auto& rounds = result_.counterexample->rounds;
    for (int step = 0; step < bound_; ++step) {
      const std::string key = KeyBuilder().add(ctrl->memo_key()).add(cops).add(r).str();
      auto it = memo_.find(key);
      if (it == memo_.end()) break;
      cops = ctrl->respond(r);
      if (it->second.worst_move < 0) {
        rounds.push_back({cops, -1});
        break;
      }
      r = it->second.worst_move;
      rounds.push_back({cops, r});
    }
  }

  const Graph& g_;
  MovementRule rule_;
  const CopFactory& factory_;
  const VerifyCopOptions& opt_;
  int bound_ = 0;
  VerifyResult result_;
  std::vector<Vertex> placement_;
  Vertex start_ = -1;
  std::string cop_name_;
  std::unordered_map<std::string, CopMemo> memo_;
  std::unordered_set<std::string> on_stack_;
  std::vector<CopFrame> stack_;
};

}  // namespace

VerifyResult exhaustive_verify_cop(const Graph& g, MovementRule rule, const CopFactory& factory,
                                   const VerifyCopOptions& options) {
  return CopVerifier(g, rule, factory, options).run();
}

// ---- robber verification ---------------------------------------------------

namespace {

struct RobberNode {
  std::vector<Vertex> cops;  // sorted, cops to move
  Vertex robber;
  std::unique_ptr<RobberStrategy> ctrl;
  int parent;  // -1 for roots
};

class RobberVerifier {
 public:
  RobberVerifier(const Graph& g, MovementRule rule, int k, const RobberFactory& factory,
                 const VerifyRobberOptions& opt)
      : g_(g), rule_(rule), k_(k), factory_(factory), opt_(opt) {}

  VerifyResult run() {
    if (k_ < 1) throw ParameterError("need at least one cop");
    const int n = g_.vertex_count();
    std::vector<std::vector<Vertex>> placements;
    if (opt_.placements) {
      for (const auto& p : *opt_.placements) {
        if (static_cast<int>(p.size()) != k_) throw ParameterError("placement size differs from the cop count");
        for (Vertex v : p)
          if (v < 0 || v >= n) throw ParameterError("placement vertex out of range");
        placements.push_back(sorted_copy(p));
      }
    } else {
      const MultisetIndexer ms(n, k_);
      for (std::uint64_t r = 0; r < ms.count(k_); ++r) {
        auto c = ms.unrank(k_, r);
        placements.emplace_back(c.begin(), c.end());
      }
    }
    result_.verified = true;
    for (const auto& p : placements) {
      auto ctrl = factory_();
      if (!ctrl) throw std::invalid_argument("robber factory returned null");
      name_ = ctrl->name();
      Vertex y;
      try {
        y = ctrl->place(p);
      } catch (const std::exception& e) {
        invalid_root(p, -1, std::string("placement failed: ") + e.what());
        return result_;
      }
      if (y < 0 || y >= n) {
        invalid_root(p, y, "placement vertex out of range");
        return result_;
      }
      if (contains(p, y)) {
        captured_root(p, y);
        return result_;
      }
      if (opt_.memoize) {
        add_node(p, y, std::move(ctrl), -1);
      } else if (!bounded_dfs(p, y, *ctrl)) {
        return result_;
      }
    }
    if (opt_.memoize && !bfs()) return result_;
    result_.message = "verified: robber never captured";
    return result_;
  }

 private:
  std::string key_of(std::span<const Vertex> cops, Vertex r, const RobberStrategy& c) const {
    return KeyBuilder().add(c.memo_key()).add(cops).add(r).str();
  }

  void add_node(std::vector<Vertex> cops, Vertex r, std::unique_ptr<RobberStrategy> ctrl, int parent) {
    if (!visited_.insert(key_of(cops, r, *ctrl)).second) return;
    nodes_.push_back({std::move(cops), r, std::move(ctrl), parent});
    queue_.push_back(static_cast<int>(nodes_.size()) - 1);
  }

  // Transcript ending at node `id`, plus an optional final round.
  Transcript path_to(int id) const {
    std::vector<int> chain;
    for (int x = id; x >= 0; x = nodes_[x].parent) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    Transcript t = make_transcript(g_, rule_, k_, opt_.graph_id);
    t.cop_controller = "exhaustive-adversary";
    t.robber_controller = name_;
    t.cop_placement = nodes_[chain[0]].cops;
    t.robber_placement = nodes_[chain[0]].robber;
    for (std::size_t i = 1; i < chain.size(); ++i) t.rounds.push_back({nodes_[chain[i]].cops, nodes_[chain[i]].robber});
    return t;
  }

  void captured(Transcript t, std::vector<Vertex> cops, Vertex robber_after) {
    t.rounds.push_back({std::move(cops), robber_after});
    t.outcome = Outcome::Capture;
    t.outcome_round = static_cast<int>(t.rounds.size());
    result_.verified = false;
    result_.message = "robber captured in round " + std::to_string(t.outcome_round);
    result_.counterexample = std::move(t);
  }

  void captured_root(const std::vector<Vertex>& p, Vertex y) {
    Transcript t = make_transcript(g_, rule_, k_, opt_.graph_id);
    t.cop_controller = "exhaustive-adversary";
    t.robber_controller = name_;
    t.cop_placement = p;
    t.robber_placement = y;
    t.outcome = Outcome::Capture;
    t.outcome_round = 0;
    result_.verified = false;
    result_.message = "robber placed on a cop";
    result_.counterexample = std::move(t);
  }

  void invalid(Transcript t, std::string reason) {
    t.outcome = Outcome::Invalid;
    t.culprit = "robber";
    t.reason = reason;
    t.outcome_round = static_cast<int>(t.rounds.size());
    result_.verified = false;
    result_.message = std::move(reason);
    result_.counterexample = std::move(t);
  }

  void invalid_root(const std::vector<Vertex>& p, Vertex y, std::string reason) {
    Transcript t = make_transcript(g_, rule_, k_, opt_.graph_id);
    t.robber_controller = name_;
    t.cop_placement = p;
    t.robber_placement = y;
    invalid(std::move(t), std::move(reason));
  }

  // Returns the robber's reply, or nullopt after recording a failure.
  std::optional<Vertex> reply(RobberStrategy& c, const std::vector<Vertex>& q, Vertex r,
                              const std::function<Transcript()>& path) {
    Vertex to;
    try {
      to = c.respond(q);
    } catch (const std::exception& e) {
      Transcript t = path();
      t.rounds.push_back({q, -1});
      invalid(std::move(t), e.what());
      return std::nullopt;
    }
    std::string why;
    if (!legal_robber_move(g_, rule_, r, to, &why)) {
      Transcript t = path();
      t.rounds.push_back({q, to});
      invalid(std::move(t), "illegal robber move: " + why);
      return std::nullopt;
    }
    if (contains(q, to)) {
      captured(path(), q, to);
      return std::nullopt;
    }
    return to;
  }

  bool bfs() {
    while (!queue_.empty()) {
      const int id = queue_.front();
      queue_.pop_front();
      ++result_.nodes;
      auto ctrl = std::move(nodes_[id].ctrl);
      const std::vector<Vertex> cops = nodes_[id].cops;
      const Vertex r = nodes_[id].robber;
      for (auto& q : joint_outcomes(g_, rule_, cops)) {
        if (contains(q, r)) {
          captured(path_to(id), q, -1);
          return false;
        }
        auto c = ctrl->clone();
        auto to = reply(*c, q, r, [&] { return path_to(id); });
        if (!to) return false;
        add_node(std::move(q), *to, std::move(c), id);
      }
    }
    return true;
  }

  // Without memoization: depth-bounded search; revisiting a position on the
  // current path closes a safe cycle.
  bool bounded_dfs(const std::vector<Vertex>& p, Vertex y, const RobberStrategy& root) {
    const int bound = opt_.round_bound > 0 ? opt_.round_bound : 4 * g_.vertex_count();
    std::unordered_set<std::string> on_path;
    std::vector<RoundRecord> path;
    auto transcript = [&] {
      Transcript t = make_transcript(g_, rule_, k_, opt_.graph_id);
      t.cop_controller = "exhaustive-adversary";
      t.robber_controller = name_;
      t.cop_placement = p;
      t.robber_placement = y;
      t.rounds = path;
      return t;
    };
    auto rec = [&](auto&& self, const std::vector<Vertex>& cops, Vertex r, const RobberStrategy& c,
                   int depth) -> bool {
      ++result_.nodes;
      const std::string key = key_of(cops, r, c);
      if (depth >= bound || on_path.count(key)) return true;
      on_path.insert(key);
      for (auto& q : joint_outcomes(g_, rule_, cops)) {
        if (contains(q, r)) {
          captured(transcript(), q, -1);
          return false;
        }
        auto next = c.clone();
        auto to = reply(*next, q, r, transcript);
        if (!to) return false;
        path.push_back({q, *to});
        if (!self(self, q, *to, *next, depth + 1)) return false;
        path.pop_back();
      }
      on_path.erase(key);
      return true;
    };
    return rec(rec, p, y, root, 0);
  }

  const Graph& g_;
  MovementRule rule_;
  int k_;
  const RobberFactory& factory_;
  const VerifyRobberOptions& opt_;
  VerifyResult result_;
  std::string name_;
  std::vector<RobberNode> nodes_;
  std::deque<int> queue_;
  std::unordered_set<std::string> visited_;
};

}  // namespace

VerifyResult exhaustive_verify_robber(const Graph& g, MovementRule rule, int cops, const RobberFactory& factory,
                                      const VerifyRobberOptions& options) {
  return RobberVerifier(g, rule, cops, factory, options).run();
}

}  // namespace plab
