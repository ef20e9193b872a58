#pragma once

#include <cstdint>

#include "pww/error.hpp"

namespace pww {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int choose2(Int n) { return n < 2 ? 0 : checked_mul(n, n - 1) / 2; }

// d(d+1)/2: number of vertex pairs on a path of length d, and the
// hyper-Wiener contribution of a pair at distance d.
inline Int pair_weight(Int d) { return checked_mul(d, d + 1) / 2; }

} // namespace pww
