#pragma once

// Exact number types and integer square root.
//
// All counting arithmetic in this library is arbitrary-precision and exact;
// floating point is confined to guarded_floor.hpp.

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace hdepth {

using Int = std::int64_t;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Working-precision floats for the guard-band evaluations (decimal digits).
using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;

/// floor(sqrt(x)) for x >= 0, self-adjusting so the result is exact
/// independent of the backend's rounding.
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  BigInt r = boost::multiprecision::sqrt(x);
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline Int isqrt(Int x) { return isqrt(BigInt(x)).convert_to<Int>(); }

/// ceil(a/2) for a >= 0.
inline Int ceil_half(Int a) { return (a + 1) / 2; }

/// floor(a/2), correct for negative a as well.
inline Int floor_half(Int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace hdepth
