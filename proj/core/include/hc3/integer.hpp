#pragma once

#include <cstdint>

#include "hc3/error.hpp"

namespace hc3 {

// Lattice coordinates, norms and determinants are 64-bit integers. Every
// operation that could leave the range goes through the checked helpers
// below, so results are either exact or an ArithmeticOverflow is thrown.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

/// Floor division (rounds toward negative infinity). `b` must be nonzero.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Modulo with result in [0, |b|).
inline Int floor_mod(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

/// Nearest integer to a/b, ties toward negative infinity. `b` must be nonzero.
inline Int round_div(Int a, Int b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return floor_div(checked_add(checked_mul(2, a), b), checked_mul(2, b));
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(Int n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  if (n < 2) return n;
  // Integer Newton iteration starting above the root.
  Int x = n;
  Int y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

/// ceil(sqrt(n)) for n >= 0.
inline Int isqrt_ceil(Int n) {
  Int r = isqrt(n);
  return r * r == n ? r : r + 1;
}

inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = floor_div(old_r, r);
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

}  // namespace hc3
