#pragma once

// The reproduction suite: numbered checks of the cop-number results, each
// comparing an exact expected value with a computed one.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plab/table_cache.hpp"

namespace plab {

enum class Verdict { Pass, Fail, Skipped };
std::string verdict_name(Verdict v);

struct CheckRecord {
  std::string id;         // "<criterion><letter>", e.g. "4a"
  int criterion = 0;
  std::string anchor;     // the claim being checked
  std::string instance;
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::Fail;
  std::string note;
  double seconds = 0;
};

struct SuiteConfig {
  bool heavy = false;
  std::uint64_t seed = 1;
  TableCache* cache = nullptr;
  std::vector<int> only;  // empty = every criterion
  std::function<void(const CheckRecord&)> progress;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::string version;
  bool heavy = false;
  std::vector<CheckRecord> records;

  int count(Verdict v) const;
  // A criterion passes when none of its records failed and at least one ran.
  Verdict criterion_verdict(int criterion) const;
  bool passed() const { return count(Verdict::Fail) == 0; }

  // Timings are left out unless asked for, so equal seeds give equal bytes.
  std::string to_markdown(bool timings = false) const;
  std::string to_csv(bool timings = false) const;
  nlohmann::json to_json(bool timings = false) const;
};

inline constexpr int kCriteria = 14;

SuiteReport run_paper_suite(const SuiteConfig& config);

// Writes report.md, report.csv and report.json into `dir`.
void write_report(const SuiteReport& report, const std::string& dir, bool timings = false);

std::string plab_version();

}  // namespace plab
