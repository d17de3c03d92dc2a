#pragma once

#include <cstddef>
#include <vector>

namespace ggor::detail {

// Advances `idx` (strictly increasing, values < n) to the next subset in
// lexicographic order. Returns false after the last one.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

inline std::vector<std::size_t> range(std::size_t n) { return first_subset(n); }

}  // namespace ggor::detail
