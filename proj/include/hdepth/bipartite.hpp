#pragma once

// Hilbert depth of S/I for the edge ideal of the complete bipartite graph
// with block sizes n >= m >= 1.
//
// The depth is the largest q for which every even-order term inequality
//   shifted_binomial(q-n, 2l) + shifted_binomial(q-m, 2l) >= C(q, 2l)
// holds (1 <= l <= q/2).  quotient_hdepth scans q downward from n+m and
// returns the first pass, together with witnesses and all closed-form
// bounds this module knows about.

#include <optional>
#include <vector>

#include "hdepth/binomial.hpp"
#include "hdepth/guarded_floor.hpp"
#include "hdepth/integer.hpp"

namespace hdepth {

/// Block sizes of the bipartite case, normalized so n >= m >= 1.
class BipartiteCase {
 public:
  BipartiteCase(Int n, Int m) : n_(n >= m ? n : m), m_(n >= m ? m : n) {
    if (m_ < 1) throw std::domain_error("BipartiteCase: block sizes must be >= 1");
  }
  Int n() const { return n_; }
  Int m() const { return m_; }
  Int total_vars() const { return n_ + m_; }

 private:
  Int n_;
  Int m_;
};

struct CriterionTerm {
  Int ell;
  BigInt lhs_n;  // shifted_binomial(q - n, 2*ell)
  BigInt lhs_m;  // shifted_binomial(q - m, 2*ell)
  BigInt rhs;    // binomial(q, 2*ell)
};

struct CriterionProbe {
  Int q = 0;
  std::vector<CriterionTerm> failures;  // ascending ell
  bool passes() const { return failures.empty(); }
};

/// Evaluate every term inequality at q and record all failing orders.
inline CriterionProbe criterion_holds(const BipartiteCase& c, Int q) {
  if (q < 0 || q > c.total_vars())
    throw std::domain_error("criterion_holds: q out of range");
  CriterionProbe probe;
  probe.q = q;
  for (Int ell = 1; 2 * ell <= q; ++ell) {
    BigInt a = shifted_binomial(q - c.n(), 2 * ell);
    BigInt b = shifted_binomial(q - c.m(), 2 * ell);
    BigInt rhs = binomial(q, 2 * ell);
    if (a + b < rhs) probe.failures.push_back({ell, std::move(a), std::move(b), std::move(rhs)});
  }
  return probe;
}

/// Fail-fast variant for scans.
inline bool criterion_passes(const BipartiteCase& c, Int q) {
  for (Int ell = 1; 2 * ell <= q; ++ell) {
    if (shifted_binomial(q - c.n(), 2 * ell) + shifted_binomial(q - c.m(), 2 * ell) <
        binomial(q, 2 * ell))
      return false;
  }
  return true;
}

/// hdepth of the quotient S/I: largest passing q, found by descending scan
/// from n+m.  q <= 1 passes vacuously, so the scan always terminates with
/// a value.
inline Int quotient_hdepth_value(const BipartiteCase& c) {
  for (Int q = c.total_vars(); q > 1; --q)
    if (criterion_passes(c, q)) return q;
  return 1;
}

/// hdepth of the ideal itself: floor((n+m+2)/2), exact closed form.
inline Int edge_ideal_hdepth(const BipartiteCase& c) {
  return (c.total_vars() + 2) / 2;
}

/// Unconditional lower bound ceil(n/2).
inline Int half_lower_bound(const BipartiteCase& c) { return ceil_half(c.n()); }

/// Unconditional upper bound ceil(n + m + 1/2 - sqrt(2nm + 1/4)).
inline Int sqrt_upper_bound(const BipartiteCase& c) {
  return ceil_sqrt_upper_bound(c.n(), c.m());
}

/// Central plateau: for m close enough to n/2 the depth equals ceil(n/2),
/// detected by an integer sign predicate.
///   n = 2s:     m = s + t,     applies iff t^2 - t - 2s < 0
///   n = 2s + 1: m = s + 1 + t, applies iff t^2 - t - 4s - 2 < 0
struct PlateauProbe {
  Int s = 0;
  Int t = 0;
  Int predicate_value = 0;
  Int value = 0;  // ceil(n/2); the depth when the probe applies
  bool applies() const { return predicate_value < 0; }
};

inline PlateauProbe central_plateau(const BipartiteCase& c) {
  PlateauProbe p;
  if (c.n() % 2 == 0) {
    p.s = c.n() / 2;
    p.t = c.m() - p.s;
    p.predicate_value = p.t * p.t - p.t - 2 * p.s;
    p.value = p.s;
  } else {
    p.s = (c.n() - 1) / 2;
    p.t = c.m() - p.s - 1;
    p.predicate_value = p.t * p.t - p.t - 4 * p.s - 2;
    p.value = p.s + 1;
  }
  return p;
}

inline std::optional<Int> central_plateau_value(const BipartiteCase& c) {
  const PlateauProbe p = central_plateau(c);
  if (p.applies()) return p.value;
  return std::nullopt;
}

/// Two-sided sandwich for the diagonal case n = m:
///   floor(n/2 + sqrt(floor(n/2) ln 2)) - 1 <= h(n,n)
///                                   <= floor((n+1)/2 + sqrt(floor(n/2) ln 2)).
struct DiagonalBounds {
  Int lo = 0;
  Int hi = 0;
  bool certified = false;
  double margin = 0.0;
};

inline DiagonalBounds diagonal_bounds(Int n) {
  if (n < 2) throw std::domain_error("diagonal_bounds: n must be >= 2");
  const GuardedFloorResult lo = floor_half_plus_sqrt_ln2(n, n / 2);
  const GuardedFloorResult hi = floor_half_plus_sqrt_ln2(n + 1, n / 2);
  return {lo.value - 1, hi.value, lo.certified && hi.certified,
          std::min(lo.margin, hi.margin)};
}

/// Sharper diagonal lower bound floor((n-1)/2 + sqrt(floor(n/2) ln 2)),
/// conditional on the bounded-product conjecture.
inline GuardedFloorResult diagonal_conjectured_bound(Int n) {
  if (n < 2)
    throw std::domain_error("diagonal_conjectured_bound: n must be >= 2");
  return floor_half_plus_sqrt_ln2(n - 1, n / 2);
}

/// Lower bound for the star case m = 1: ceil(n/2) + floor(sqrt(n)) - 2.
inline Int star_lower_bound(Int n) {
  if (n < 1) throw std::domain_error("star_lower_bound: n must be >= 1");
  return ceil_half(n) + isqrt(n) - 2;
}

/// Coarse location of the depth from the block-size ratio: when the blocks
/// are nearly balanced (n <= 2m - 2) the depth stays below m; otherwise it
/// lands in [m, n - m + 1].
struct RegimeBounds {
  bool narrow = false;  // n <= 2m - 2
  std::optional<Int> h_min;
  Int h_max = 0;
};

inline RegimeBounds regime_classification(const BipartiteCase& c) {
  if (c.n() <= 2 * c.m() - 2) return {true, std::nullopt, c.m() - 1};
  return {false, c.m(), c.n() - c.m() + 1};
}

/// Full per-case report: the depth plus every applicable bound and the
/// criterion witnesses at q = h (passing) and q = h + 1 (first failure).
struct HdepthReport {
  BipartiteCase input;
  Int h = 0;
  Int lower_half = 0;
  Int upper_sqrt = 0;
  Int ideal_hdepth = 0;
  PlateauProbe plateau;
  std::optional<DiagonalBounds> diagonal;
  RegimeBounds regime;
  CriterionProbe witness_at_h;
  std::optional<CriterionProbe> witness_above;  // absent when h = n + m
};

inline HdepthReport quotient_hdepth(const BipartiteCase& c) {
  HdepthReport r{c};
  r.h = quotient_hdepth_value(c);
  r.lower_half = half_lower_bound(c);
  r.upper_sqrt = sqrt_upper_bound(c);
  r.ideal_hdepth = edge_ideal_hdepth(c);
  r.plateau = central_plateau(c);
  if (c.n() == c.m() && c.n() >= 2) r.diagonal = diagonal_bounds(c.n());
  r.regime = regime_classification(c);
  r.witness_at_h = criterion_holds(c, r.h);
  if (r.h < c.total_vars()) r.witness_above = criterion_holds(c, r.h + 1);
  return r;
}

}  // namespace hdepth
