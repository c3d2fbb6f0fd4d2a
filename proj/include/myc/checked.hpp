#pragma once

#include "myc/errors.hpp"

namespace myc {

/// Overflow-checked arithmetic on long long. Formula counts and dimension
/// arithmetic must never wrap silently; failures surface as errors instead.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in multiplication");
  return r;
}

inline long long checked_pow(long long base, long long exp) {
  if (exp < 0) throw error("negative exponent");
  long long r = 1;
  for (long long i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace myc
