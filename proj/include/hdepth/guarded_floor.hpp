#pragma once

// Certified floors and ceilings of irrational expressions.
//
// Every floor of a sqrt/log expression is evaluated at increasing precision
// (double, then 50-digit, then 100-digit floats) until the value sits a
// comfortable guard band away from an integer boundary.  If even 100 digits
// cannot separate it, the result is returned uncertified rather than
// silently rounded.  Bounds that admit a pure integer formulation
// (ceil_sqrt_upper_bound) bypass floating point entirely.

#include <cmath>

#include "hdepth/integer.hpp"

namespace hdepth {

struct GuardedFloorResult {
  Int value = 0;
  bool certified = false;
  double margin = 0.0;  // distance from the nearest integer boundary
};

namespace detail {

template <class T>
struct PrecisionTag {
  using type = T;
};

template <class F>
F ln2() {
  static const F value = log(F(2));
  return value;
}

template <>
inline double ln2<double>() {
  return 0.6931471805599453;
}

template <class Eval>
GuardedFloorResult guarded_floor_tiered(Eval eval) {
  {
    const double v = eval(PrecisionTag<double>{});
    const double fl = std::floor(v);
    const double frac = v - fl;
    const double margin = std::min(frac, 1.0 - frac);
    if (margin > 1e-9) return {static_cast<Int>(fl), true, margin};
  }
  {
    const Float50 v = eval(PrecisionTag<Float50>{});
    const Float50 fl = floor(v);
    const Float50 frac = v - fl;
    const Float50 margin = frac < Float50(0.5) ? frac : Float50(1) - frac;
    if (margin > Float50("1e-30"))
      return {fl.convert_to<Int>(), true, margin.convert_to<double>()};
  }
  const Float100 v = eval(PrecisionTag<Float100>{});
  const Float100 fl = floor(v);
  const Float100 frac = v - fl;
  const Float100 margin = frac < Float100(0.5) ? frac : Float100(1) - frac;
  return {fl.convert_to<Int>(), margin > Float100("1e-60"),
          margin.convert_to<double>()};
}

template <class Eval>
GuardedFloorResult guarded_ceil_tiered(Eval eval) {
  auto negated = [&](auto tag) { return -eval(tag); };
  GuardedFloorResult r = guarded_floor_tiered(negated);
  return {-r.value, r.certified, r.margin};
}

}  // namespace detail

/// floor(c/2 + sqrt(K * ln 2)) where c = c_times_2 / 2 may be half-integral
/// and K >= 0.  For K >= 1 the sqrt term is irrational, so certification
/// always succeeds at some tier; K = 0 is handled exactly in integers.
inline GuardedFloorResult floor_half_plus_sqrt_ln2(Int c_times_2, Int K) {
  if (K < 0) throw std::domain_error("floor_half_plus_sqrt_ln2: negative K");
  if (K == 0)
    return {floor_half(c_times_2), true, c_times_2 % 2 == 0 ? 0.0 : 0.5};
  auto eval = [&](auto tag) {
    using F = typename decltype(tag)::type;
    using std::sqrt;
    return F(c_times_2) / 2 + sqrt(F(K) * detail::ln2<F>());
  };
  return detail::guarded_floor_tiered(eval);
}

/// ceil(x^2 / (4 ln 2)) where x = x_times_2 / 2; used for the conjecture
/// applicability thresholds ceil((x/2)^2 / ln 2).
inline GuardedFloorResult ceil_quarter_square_over_ln2(Int x_times_2) {
  auto eval = [&](auto tag) {
    using F = typename decltype(tag)::type;
    return F(x_times_2) * F(x_times_2) / (4 * detail::ln2<F>());
  };
  return detail::guarded_ceil_tiered(eval);
}

/// ceil(n + m + 1/2 - sqrt(2nm + 1/4)), evaluated purely in integers:
/// with A = 2(n+m) + 1 and B = 8nm + 1 the result is the least c such that
/// A - 2c <= 0 or (A - 2c)^2 <= B.
inline Int ceil_sqrt_upper_bound(Int n, Int m) {
  if (n < 1 || m < 1)
    throw std::domain_error("ceil_sqrt_upper_bound: block sizes must be >= 1");
  const BigInt A = 2 * (BigInt(n) + m) + 1;
  const BigInt B = 8 * BigInt(n) * m + 1;
  auto holds = [&](const BigInt& c) {
    const BigInt d = A - 2 * c;
    return d <= 0 || d * d <= B;
  };
  BigInt c = (A - isqrt(B)) / 2;
  while (!holds(c)) ++c;
  while (holds(c - 1)) --c;
  return c.convert_to<Int>();
}

}  // namespace hdepth
