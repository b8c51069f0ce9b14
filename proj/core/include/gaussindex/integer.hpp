#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaussindex {

/// Arbitrary-precision signed integer used for every exponent and coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Ordering used for printing exponents: 0, 1, -1, 2, -2, ...
inline std::strong_ordering degree_order(const Integer& a, const Integer& b) {
  const Integer abs_a = abs(a);
  const Integer abs_b = abs(b);
  if (abs_a != abs_b) return abs_a < abs_b ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a == b) return std::strong_ordering::equal;
  return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Nonnegative remainder of `value` modulo `modulus` (modulus > 0).
inline Integer floor_mod(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace gaussindex
