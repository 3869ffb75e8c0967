#pragma once

// Exact binomial coefficients, including the shifted convention used for
// negative upper arguments.

#include <algorithm>

#include "hdepth/integer.hpp"

namespace hdepth {

/// C(n, k) computed by the multiplicative formula; every intermediate
/// division is exact.  C(n, k) = 0 when k > n.
inline BigInt binomial(Int n, Int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (Int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// C(d, r) extended to negative d for even r >= 2 via the reflection
/// C(d, r) = C(-d + r - 1, r).  Both sides vanish at d = 0, so the
/// convention is seamless across the sign change.
inline BigInt shifted_binomial(Int d, Int r) {
  if (r < 2 || r % 2 != 0)
    throw std::domain_error("shifted_binomial: order must be even and positive");
  return d >= 0 ? binomial(d, r) : binomial(-d + r - 1, r);
}

}  // namespace hdepth
