#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "subgrow/errors.hpp"

namespace subgrow {

// All index/target arithmetic is exact. Verdicts never touch floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned long exp) {
  Int result = 1;
  while (exp) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

// Largest r >= 0 with r^k <= x. Requires x >= 0, k >= 1.
inline Int iroot_floor(const Int& x, unsigned long k) {
  if (x < 0) throw input_error("iroot_floor: negative radicand");
  if (k == 0) throw input_error("iroot_floor: zeroth root");
  if (k == 1 || x <= 1) return x;
  // Initial guess from the bit length, then binary search.
  unsigned long bits = boost::multiprecision::msb(x) + 1;
  Int hi = Int(1) << (bits / k + 1);
  Int lo = 0;
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Smallest r >= 0 with r^k >= x.
inline Int iroot_ceil(const Int& x, unsigned long k) {
  if (x <= 0) return 0;
  Int r = iroot_floor(x, k);
  return ipow(r, k) == x ? r : r + 1;
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

inline unsigned long bit_length(const Int& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

inline bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace subgrow
