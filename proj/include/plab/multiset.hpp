#pragma once

// Dense ranking of sorted multisets of vertex ids (combinations with
// repetition). A sorted multiset a_0 <= ... <= a_{m-1} over n symbols maps
// to the strict combination b_i = a_i + i and is ranked colexicographically:
//   rank = sum_i C(b_i, i + 1).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

class MultisetIndexer {
 public:
  MultisetIndexer() = default;
  MultisetIndexer(int symbols, int max_size) : n_(symbols), max_size_(max_size) {
    const int rows = symbols + max_size + 1;
    binom_.assign(static_cast<std::size_t>(rows) * (max_size + 2), 0);
    for (int x = 0; x < rows; ++x) {
      binom_at(x, 0) = 1;
      for (int y = 1; y <= max_size + 1 && y <= x; ++y)
        binom_at(x, y) = binom_at(x - 1, y - 1) + (y <= x - 1 ? binom_at(x - 1, y) : 0);
    }
    tables_.resize(max_size + 1);
    for (int m = 0; m <= max_size; ++m) build_table(m);
  }

  int symbols() const { return n_; }
  int max_size() const { return max_size_; }

  // C(n + m - 1, m)
  std::uint64_t count(int m) const { return m == 0 ? 1 : binom(n_ + m - 1, m); }

  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] + static_cast<int>(i), static_cast<int>(i) + 1);
    return r;
  }

  // Multiset of size m with the given rank, as a view into the table.
  std::span<const Vertex> unrank(int m, std::uint64_t r) const {
    return {tables_[m].data() + r * m, static_cast<std::size_t>(m)};
  }

 private:
  std::uint64_t& binom_at(int x, int y) { return binom_[static_cast<std::size_t>(x) * (max_size_ + 2) + y]; }
  std::uint64_t binom(int x, int y) const {
    if (y > x) return 0;
    return binom_[static_cast<std::size_t>(x) * (max_size_ + 2) + y];
  }

  void build_table(int m) {
    auto& table = tables_[m];
    const std::uint64_t total = count(m);
    if (total * static_cast<std::uint64_t>(m) > (1ull << 31)) throw std::length_error("multiset table too large");
    table.assign(total * m, 0);
    if (m == 0) return;
    std::vector<Vertex> cur(m, 0);
    // Colex order of sorted tuples: increment the lowest position that can
    // grow without passing its successor.
    for (std::uint64_t r = 0; r < total; ++r) {
      std::copy(cur.begin(), cur.end(), table.begin() + r * m);
      for (int i = 0; i < m; ++i) {
        const Vertex limit = i + 1 < m ? cur[i + 1] : n_ - 1;
        if (cur[i] < limit) {
          ++cur[i];
          for (int j = 0; j < i; ++j) cur[j] = 0;
          break;
        }
      }
    }
  }

  int n_ = 0;
  int max_size_ = 0;
  std::vector<std::uint64_t> binom_;
  std::vector<std::vector<Vertex>> tables_;
};

}  // namespace plab
