#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace smale {

// Coefficient arithmetic never wraps: every ring operation on Integer goes
// through these helpers and throws std::overflow_error instead.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Integer checked_neg(Integer a) { return checked_sub(0, a); }

inline Integer checked_abs(Integer a) { return a < 0 ? checked_neg(a) : a; }

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
inline Integer exact_divide(Integer a, Integer b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (b == -1) return checked_neg(a);
  if (a % b != 0) throw std::domain_error("inexact integer division");
  return a / b;
}

inline bool is_zero(Integer a) { return a == 0; }

}  // namespace smale
