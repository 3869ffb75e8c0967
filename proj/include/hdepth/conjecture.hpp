#pragma once

// The bounded-product conjecture: four families of rational products,
// each conjectured to stay <= 2 once k clears an explicit quadratic
// threshold.  Products are exact rationals; only the thresholds involve
// irrational arithmetic (via guarded ceilings).

#include <string>

#include "hdepth/guarded_floor.hpp"
#include "hdepth/integer.hpp"

namespace hdepth {

enum class ConjectureVariant { a, b, c, d };

inline ConjectureVariant conjecture_variant_from_char(char ch) {
  switch (ch) {
    case 'a': return ConjectureVariant::a;
    case 'b': return ConjectureVariant::b;
    case 'c': return ConjectureVariant::c;
    case 'd': return ConjectureVariant::d;
  }
  throw std::domain_error("conjecture variant must be one of a, b, c, d");
}

inline char conjecture_variant_char(ConjectureVariant v) {
  switch (v) {
    case ConjectureVariant::a: return 'a';
    case ConjectureVariant::b: return 'b';
    case ConjectureVariant::c: return 'c';
    case ConjectureVariant::d: return 'd';
  }
  return '?';
}

/// Index data of one product family: prod_{j=j_first}^{j_last} (1 + shift/(k-j)).
struct ProductSpec {
  Int j_first;
  Int j_last;
  Int shift;
};

inline ProductSpec product_spec(ConjectureVariant v, Int s) {
  if (s < 1) throw std::domain_error("product_spec: s must be >= 1");
  switch (v) {
    case ConjectureVariant::a: return {1, 2 * s, 2 * s + 1};
    case ConjectureVariant::b: return {1, 2 * s + 1, 2 * s + 2};
    case ConjectureVariant::c: return {0, 2 * s - 1, 2 * s};
    case ConjectureVariant::d: return {2, 2 * s + 1, 2 * s + 2};
  }
  throw std::domain_error("product_spec: bad variant");
}

/// Exact value of the family product at k.  Requires k > j_last so every
/// factor has positive denominator; k at or below the index range is
/// rejected rather than evaluated past a pole.
inline BigRat conjecture_product(ConjectureVariant v, Int s, Int k) {
  const ProductSpec spec = product_spec(v, s);
  if (k <= spec.j_last)
    throw std::domain_error("conjecture_product: k must exceed the index range");
  BigRat p = 1;
  for (Int j = spec.j_first; j <= spec.j_last; ++j)
    p *= BigRat(k - j + spec.shift, k - j);
  return p;
}

/// Least integer k from which the conjecture claims the product stays <= 2:
/// ceil(x^2 / ln 2) with x = 2s + 1/2, 2s + 3/2, 2s, 2s + 1 for a, b, c, d.
inline GuardedFloorResult conjecture_threshold(ConjectureVariant v, Int s) {
  if (s < 1) throw std::domain_error("conjecture_threshold: s must be >= 1");
  Int x_times_2 = 0;
  switch (v) {
    case ConjectureVariant::a: x_times_2 = 4 * s + 1; break;
    case ConjectureVariant::b: x_times_2 = 4 * s + 3; break;
    case ConjectureVariant::c: x_times_2 = 4 * s; break;
    case ConjectureVariant::d: x_times_2 = 4 * s + 2; break;
  }
  return ceil_quarter_square_over_ln2(x_times_2);
}

}  // namespace hdepth
