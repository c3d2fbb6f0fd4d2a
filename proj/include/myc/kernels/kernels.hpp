#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace myc::kernels {

// ============================================================================
// Data-parallel inner loops.
//
// The scalar entries are the reference implementations. Vector variants must
// produce bit-identical results and are selected once at runtime from CPU
// capabilities. Everything is integer arithmetic; no floating point.
// ============================================================================

struct KernelTable {
  const char* name;

  // true iff the word arrays a and b share a set bit.
  bool (*masks_intersect)(const std::uint64_t* a, const std::uint64_t* b,
                          std::size_t words);

  // true iff every set bit of a is also set in b.
  bool (*mask_subset)(const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words);

  // y[i] = (y[i] + c * x[i]) mod p for i < n. Inputs already reduced mod p.
  // Requires p < 2^15 so c*x+y stays below 2^30 (single Barrett step).
  void (*axpy_mod_p)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                     std::size_t n, std::uint32_t p);
};

const KernelTable& scalar_kernels();

// nullptr when AVX2 is unavailable on this machine or build.
const KernelTable* avx2_kernels();

// Scalar unless the CPU supports AVX2. Setting the environment variable
// MYC_FORCE_SCALAR=1 pins the scalar table (used by the equivalence tests).
const KernelTable& active_kernels();

// Largest prime below 2^15; default modulus for the mod-p rank pass.
inline constexpr std::uint32_t kDefaultModulus = 32749;

// Multiplicative inverse of a mod p (p prime, a not divisible by p).
std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p);

// Rank over F_p of a dense row-major matrix whose entries are already
// reduced mod p. Destroys `rows`. Used as a cross-check of the exact
// integer elimination, never as a substitute for it.
long long rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows,
                     std::uint32_t p = kDefaultModulus);

}  // namespace myc::kernels
