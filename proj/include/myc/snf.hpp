#pragma once

#include <vector>

#include "myc/bigint.hpp"
#include "myc/matrix.hpp"

namespace myc {

struct SnfResult {
  /// Nonzero invariant factors, positive, each dividing the next.
  std::vector<bigint> factors;
  long long rank = 0;  // == factors.size()
};

/// Smith normal form over the integers. Exact: a sparse elimination phase
/// consumes unit pivots (Markowitz-style minimal fill, deterministic ties),
/// and the residual core goes through a dense arbitrary-precision reduction
/// with minimal-magnitude pivoting. The divisibility chain is verified on
/// every call.
SnfResult smith_normal_form(const IntMatrix& m);

/// Rank of m over F_p (lower bound for the integer rank; equality unless p
/// divides an invariant factor). Cross-check only, densifies internally.
long long rank_over_fp(const IntMatrix& m, std::uint32_t p);

}  // namespace myc
