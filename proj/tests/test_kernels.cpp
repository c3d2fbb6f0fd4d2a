#include <doctest.h>

#include <cstdint>
#include <vector>

#include "myc/kernels/kernels.hpp"

#include "oracles.hpp"

using myc::kernels::avx2_kernels;
using myc::kernels::kDefaultModulus;
using myc::kernels::KernelTable;
using myc::kernels::scalar_kernels;

namespace {

std::vector<std::uint64_t> random_words(testutil::Rng& rng, std::size_t n,
                                        int density_pct) {
  std::vector<std::uint64_t> out(n, 0);
  for (auto& w : out)
    for (int b = 0; b < 64; ++b)
      if (rng.chance(density_pct)) w |= std::uint64_t(1) << b;
  return out;
}

}  // namespace

TEST_CASE("scalar bit kernels: hand cases") {
  const KernelTable& k = scalar_kernels();
  std::uint64_t a[2] = {0b1010, 0};
  std::uint64_t b[2] = {0b0101, 0};
  CHECK_FALSE(k.masks_intersect(a, b, 2));
  b[0] = 0b0110;
  CHECK(k.masks_intersect(a, b, 2));

  std::uint64_t sub[1] = {0b0010};
  std::uint64_t sup[1] = {0b1010};
  CHECK(k.mask_subset(sub, sup, 1));
  CHECK_FALSE(k.mask_subset(sup, sub, 1));
  CHECK(k.mask_subset(sub, sub, 1));
  // Zero words: the empty set is a subset of everything and meets nothing.
  CHECK(k.mask_subset(sub, sup, 0));
  CHECK_FALSE(k.masks_intersect(sub, sup, 0));
}

TEST_CASE("scalar axpy_mod_p: hand case and edges") {
  const KernelTable& k = scalar_kernels();
  const std::uint32_t p = 7;
  std::vector<std::uint32_t> y = {0, 1, 2, 3, 4, 5, 6};
  std::vector<std::uint32_t> x = {6, 5, 4, 3, 2, 1, 0};
  k.axpy_mod_p(y.data(), x.data(), 3, y.size(), p);
  // y[i] = (y[i] + 3*x[i]) mod 7
  const std::vector<std::uint32_t> expect = {4, 2, 0, 5, 3, 1, 6};
  CHECK(y == expect);
  k.axpy_mod_p(y.data(), x.data(), 0, y.size(), p);
  CHECK(y == expect);  // c = 0 is the identity
  k.axpy_mod_p(y.data(), x.data(), 3, 0, p);
  CHECK(y == expect);  // n = 0 touches nothing
}

TEST_CASE("vector kernels match scalar bit-for-bit") {
  const KernelTable* vec = avx2_kernels();
  if (vec == nullptr) {
    MESSAGE("no AVX2 on this machine; equivalence suite skipped");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  testutil::Rng rng(20240817);

  // Word counts straddle the 4-word vector stride, including remainders.
  for (std::size_t words = 1; words <= 9; ++words) {
    for (int trial = 0; trial < 50; ++trial) {
      const int density = 1 + int(rng.below(40));
      auto a = random_words(rng, words, density);
      auto b = random_words(rng, words, density);
      CHECK(ref.masks_intersect(a.data(), b.data(), words) ==
            vec->masks_intersect(a.data(), b.data(), words));
      CHECK(ref.mask_subset(a.data(), b.data(), words) ==
            vec->mask_subset(a.data(), b.data(), words));
      // Force the subset-true path too: b |= a.
      auto b2 = b;
      for (std::size_t i = 0; i < words; ++i) b2[i] |= a[i];
      CHECK(vec->mask_subset(a.data(), b2.data(), words));
    }
  }

  // axpy across lengths that straddle the 8-lane stride, moduli up to the
  // Barrett bound.
  const std::uint32_t primes[] = {2, 3, 7, 251, 12289, kDefaultModulus};
  for (std::uint32_t p : primes) {
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(7),
                          std::size_t(8), std::size_t(9), std::size_t(16),
                          std::size_t(31), std::size_t(64), std::size_t(100)}) {
      std::vector<std::uint32_t> y0(n), x(n);
      for (std::size_t i = 0; i < n; ++i) {
        y0[i] = std::uint32_t(rng.below(p));
        x[i] = std::uint32_t(rng.below(p));
      }
      const std::uint32_t c = std::uint32_t(rng.below(p));
      std::vector<std::uint32_t> ys = y0, yv = y0;
      ref.axpy_mod_p(ys.data(), x.data(), c, n, p);
      vec->axpy_mod_p(yv.data(), x.data(), c, n, p);
      CHECK(ys == yv);
      // Worst-case inputs: everything at p-1.
      std::vector<std::uint32_t> tops(n, p - 1), topv(n, p - 1), xt(n, p - 1);
      ref.axpy_mod_p(tops.data(), xt.data(), p - 1, n, p);
      vec->axpy_mod_p(topv.data(), xt.data(), p - 1, n, p);
      CHECK(tops == topv);
    }
  }
}

TEST_CASE("active kernel table is one of the registered ones") {
  const KernelTable& active = myc::kernels::active_kernels();
  const bool is_scalar = std::string(active.name) == "scalar";
  const bool is_avx2 = std::string(active.name) == "avx2";
  CHECK((is_scalar || is_avx2));
  if (avx2_kernels() == nullptr) CHECK(is_scalar);
}

TEST_CASE("rank_mod_p: identity, singular, and rectangular") {
  using myc::kernels::rank_mod_p;
  std::vector<std::vector<std::uint32_t>> id = {{1, 0}, {0, 1}};
  CHECK(rank_mod_p(id) == 2);
  std::vector<std::vector<std::uint32_t>> sing = {{1, 2}, {2, 4}};
  CHECK(rank_mod_p(sing, 7) == 1);
  std::vector<std::vector<std::uint32_t>> rect = {{1, 2, 3}, {2, 4, 6}};
  CHECK(rank_mod_p(rect, 5) == 1);
  std::vector<std::vector<std::uint32_t>> zero = {{0, 0}, {0, 0}};
  CHECK(rank_mod_p(zero) == 0);
}

TEST_CASE("inv_mod_p inverts") {
  for (std::uint32_t p : {std::uint32_t(7), kDefaultModulus}) {
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 50); ++a) {
      const std::uint64_t prod =
          std::uint64_t(a) * myc::kernels::inv_mod_p(a, p) % p;
      CHECK(prod == 1);
    }
  }
}
