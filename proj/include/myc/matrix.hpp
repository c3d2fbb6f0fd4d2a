#pragma once

#include <vector>

#include "myc/bigint.hpp"
#include "myc/complex.hpp"

namespace myc {

/// Representation switch: matrices whose larger side is below this stay
/// dense in the elimination code, bigger ones go through the sparse path.
inline constexpr long long kSparseThreshold = 10'000;

/// Sparse integer matrix in triplet form. Values are 64-bit at the
/// interface because every producer (boundary maps, tests) emits small
/// entries; the Smith normal form escalates to arbitrary precision
/// internally whenever intermediate growth demands it.
struct IntMatrix {
  long long rows = 0;
  long long cols = 0;

  struct Entry {
    int r;
    int c;
    long long v;
  };
  std::vector<Entry> entries;  // unique (r, c), v != 0

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& grid);

  bool prefer_dense() const { return rows < kSparseThreshold && cols < kSparseThreshold; }

  /// Dense copy for small matrices and tests.
  std::vector<std::vector<bigint>> to_dense() const;
};

/// Boundary map from d-faces to (d-1)-faces of k with the usual alternating
/// signs; d = 0 maps every vertex to the empty face with coefficient +1.
/// A degree above the top dimension yields a matrix with zero columns.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// true iff the composite of consecutive boundary maps vanishes in every
/// degree of k. Diagnostic helper for tests and verbose runs.
bool boundary_squares_to_zero(const SimplicialComplex& k);

}  // namespace myc
