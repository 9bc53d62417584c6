#pragma once

// On-disk cache of solved tables keyed by (adjacency hash, k, rule).
//
// File layout (little-endian):
//   "PLAB1" | u8 cop rule | u8 robber rule | u8 k | u32 n | u64 adjacency hash
//   | u64 state count | win bits (u64 words) | capture times (u16 each)

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plab/solver.hpp"

namespace plab {

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_table(std::ostream& out, const SolveTable& table);
// Throws CacheFormatError when the stream is truncated, has the wrong magic
// or does not match (g, k, rule).
SolveTable read_table(std::istream& in, std::shared_ptr<const Graph> g, int cops, MovementRule rule);

// Human-readable dump: header plus per-state winner/time for every state.
std::string table_to_json(const SolveTable& table);

struct CacheEntry {
  std::filesystem::path path;
  std::uintmax_t bytes = 0;
};

class TableCache {
 public:
  // Resolution order: explicit dir, then $PLAB_CACHE_DIR, then ./plab-cache.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const Graph& g, int cops, MovementRule rule) const;

  // nullptr on a miss. A corrupt file is reported through warnings() and
  // treated as a miss.
  std::shared_ptr<const SolveTable> get(std::shared_ptr<const Graph> g, int cops, MovementRule rule);
  void put(const SolveTable& table);
  std::shared_ptr<const SolveTable> get_or_solve(std::shared_ptr<const Graph> g, int cops, MovementRule rule);

  std::vector<CacheEntry> list() const;
  // Removes every cache file; returns how many were deleted.
  int clear();

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> warnings_;
};

}  // namespace plab
