#pragma once

// Small matroid collections shared by the suites.

#include <random>
#include <vector>

#include "regmat/enumerate.hpp"
#include "regmat/matroid.hpp"

namespace regmat::corpus {

/// A random binary matroid with at most `rows` rank on `cols` elements.
inline BinaryMatroid random_matroid(std::mt19937_64& rng, int rows, int cols) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(rows));
  for (auto& m : masks) m = rng() & low_mask(cols);
  return BinaryMatroid::from_any_matrix(Gf2Matrix::from_row_masks(cols, masks));
}

/// One representative of every loopless class with 1 <= k <= n <= max_size.
inline std::vector<BinaryMatroid> loopless_upto(int max_size, MatroidClass cls = MatroidClass::kLoopless) {
  std::vector<BinaryMatroid> out;
  for (int n = 1; n <= max_size; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& r : generate(k, n, cls)) out.push_back(to_matroid(r));
    }
  }
  return out;
}

/// Same matroid with columns reordered; new element e is old element perm[e-1].
inline BinaryMatroid relabel(const BinaryMatroid& m, const std::vector<int>& perm) {
  return BinaryMatroid(m.matrix().select_columns(perm));
}

}  // namespace regmat::corpus
