// Runs the full reproduction suite, heavy instance included, and prints one
// line per acceptance criterion. Exits 1 if any criterion fails.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "plab/suite.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path cache_dir =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::temp_directory_path() / "plab-acceptance-cache";
  plab::TableCache cache(cache_dir);
  plab::SuiteConfig cfg;
  cfg.heavy = true;
  cfg.cache = &cache;
  const plab::SuiteReport report = plab::run_paper_suite(cfg);

  for (const auto& r : report.records)
    if (r.verdict != plab::Verdict::Pass)
      std::cout << "  " << r.id << " " << plab::verdict_name(r.verdict) << ": " << r.instance << "\n    expected "
                << r.expected << "\n    computed " << r.computed << (r.note.empty() ? "" : "\n    " + r.note) << "\n";
  bool ok = true;
  for (int c = 1; c <= plab::kCriteria; ++c) {
    const auto v = report.criterion_verdict(c);
    ok = ok && v == plab::Verdict::Pass;
    std::cout << "criterion " << c << ": " << plab::verdict_name(v) << "\n";
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
