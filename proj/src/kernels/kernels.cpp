#include "myc/kernels/kernels.hpp"

#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#define MYC_X86 1
#include <immintrin.h>
#endif

namespace myc::kernels {

// ============================================================================
// Scalar reference kernels
// ============================================================================

namespace {

bool masks_intersect_scalar(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool mask_subset_scalar(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void axpy_mod_p_scalar(std::uint32_t* y, const std::uint32_t* x,
                       std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = std::uint64_t(y[i]) + std::uint64_t(c) * x[i];
    y[i] = std::uint32_t(v % p);
  }
}

const KernelTable g_scalar = {
    "scalar",
    &masks_intersect_scalar,
    &mask_subset_scalar,
    &axpy_mod_p_scalar,
};

// ============================================================================
// AVX2 kernels
// ============================================================================

#if MYC_X86

__attribute__((target("avx2"))) bool masks_intersect_avx2(
    const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

__attribute__((target("avx2"))) bool mask_subset_avx2(const std::uint64_t* a,
                                                      const std::uint64_t* b,
                                                      std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i t = _mm256_andnot_si256(vb, va);  // a & ~b
    if (!_mm256_testz_si256(t, t)) return false;
  }
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Barrett reduction step for four 64-bit lanes: with m = floor(2^32 / p) and
// v < 2^30, the quotient estimate q = (v*m) >> 32 satisfies v - q*p in
// [0, 2p), so one conditional subtract finishes the reduction. Kept as a
// free function because a lambda body would compile for the default target.
__attribute__((target("avx2"))) inline __m256i axpy_reduce4(
    __m256i y64, __m256i x64, __m256i cv, __m256i mv, __m256i pv,
    __m256i pm1) {
  __m256i v = _mm256_add_epi64(y64, _mm256_mul_epu32(x64, cv));
  __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(v, mv), 32);
  __m256i r = _mm256_sub_epi64(v, _mm256_mul_epu32(q, pv));
  __m256i over = _mm256_cmpgt_epi64(r, pm1);
  return _mm256_sub_epi64(r, _mm256_and_si256(over, pv));
}

__attribute__((target("avx2"))) void axpy_mod_p_avx2(std::uint32_t* y,
                                                     const std::uint32_t* x,
                                                     std::uint32_t c,
                                                     std::size_t n,
                                                     std::uint32_t p) {
  const std::uint64_t m = (std::uint64_t(1) << 32) / p;
  const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i pv = _mm256_set1_epi64x(static_cast<long long>(p));
  const __m256i pm1 = _mm256_set1_epi64x(static_cast<long long>(p) - 1);
  const __m256i gather = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i y8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i xlo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(x8));
    __m256i xhi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(x8, 1));
    __m256i ylo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(y8));
    __m256i yhi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(y8, 1));
    __m256i rlo = axpy_reduce4(ylo, xlo, cv, mv, pv, pm1);
    __m256i rhi = axpy_reduce4(yhi, xhi, cv, mv, pv, pm1);
    // Each 64-bit lane holds a result in its low 32 bits; gather them.
    __m256i glo = _mm256_permutevar8x32_epi32(rlo, gather);
    __m256i ghi = _mm256_permutevar8x32_epi32(rhi, gather);
    __m256i out = _mm256_permute2x128_si256(glo, ghi, 0x20);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < n; ++i) {
    std::uint64_t v = std::uint64_t(y[i]) + std::uint64_t(c) * x[i];
    y[i] = std::uint32_t(v % p);
  }
}

const KernelTable g_avx2 = {
    "avx2",
    &masks_intersect_avx2,
    &mask_subset_avx2,
    &axpy_mod_p_avx2,
};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

#endif  // MYC_X86

}  // namespace

const KernelTable& scalar_kernels() { return g_scalar; }

const KernelTable* avx2_kernels() {
#if MYC_X86
  if (cpu_has_avx2()) return &g_avx2;
#endif
  return nullptr;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* force = std::getenv("MYC_FORCE_SCALAR");
    if (force && force[0] == '1') return &g_scalar;
    if (const KernelTable* v = avx2_kernels()) return v;
    return &g_scalar;
  }();
  return *chosen;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); p prime.
  long long t = 0, newt = 1;
  long long r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}

long long rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows,
                     std::uint32_t p) {
  const KernelTable& K = active_kernels();
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows ? rows[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t piv = r;
    while (piv < nrows && rows[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[r], rows[piv]);
    std::uint32_t inv = inv_mod_p(rows[r][col], p);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (rows[i][col] == 0) continue;
      std::uint64_t f = std::uint64_t(rows[i][col]) * inv % p;
      std::uint32_t c = std::uint32_t((p - f) % p);
      K.axpy_mod_p(rows[i].data(), rows[r].data(), c, ncols, p);
    }
    ++r;
  }
  return static_cast<long long>(r);
}

}  // namespace myc::kernels
