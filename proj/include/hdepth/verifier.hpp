#pragma once

// Mechanical verification of the library's claim registry over finite
// windows.
//
// Each claim id names one checkable statement about h(n,m) or about the
// bounded-product conjecture.  A check recomputes everything from scratch
// inside its window, reports violations with both sides of the failed
// inequality re-derived (never cached), counts the cases it covered, and
// flags itself incomplete if the case budget runs out.  Empirical
// observations that are not part of any claim (such as which criterion
// order fails first) are reported in notes, never asserted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdepth/bipartite.hpp"
#include "hdepth/conjecture.hpp"
#include "hdepth/parallel.hpp"
#include "hdepth/sqfree.hpp"

namespace hdepth {

enum class TheoremId {
  cor24,              // h(n,m) >= ceil(n/2)
  thm21,              // hdepth of the edge ideal itself is floor((n+m+2)/2)
  thm22,              // h(n,m) <= ceil(n+m+1/2 - sqrt(2nm+1/4))
  thm23regimes,       // narrow blocks force h < m; wide blocks force m <= h <= n-m+1
  thm31,              // central plateau: h = ceil(n/2) when the sign predicate holds
  thm32,              // diagonal sandwich for h(n,n)
  thm33_1,            // h(n,m) nonincreasing in m on [1, floor(n/2)]
  thm33_2,            // h(n,m) nondecreasing in m on [ceil(n/2), n]
  thm33_3,            // h(n, floor(n/2)) = h(n, ceil(n/2)) = ceil(n/2)
  thm33_4,            // h(n,m) >= h(n,n-m) for m <= floor(n/2)
  thm33_5,            // floor(n/2) <= h(n,m) <= h(n,1)
  clim_trend,         // h/n approaches 1/2: band check plus shrinking widths
  cipu_m1,            // star case: h(n,1) >= ceil(n/2) + floor(sqrt(n)) - 2
  pop42_conditional,  // sharper diagonal lower bound, conditional on the conjecture
};

inline const char* theorem_id_name(TheoremId id) {
  switch (id) {
    case TheoremId::cor24: return "cor24";
    case TheoremId::thm21: return "thm21";
    case TheoremId::thm22: return "thm22";
    case TheoremId::thm23regimes: return "thm23regimes";
    case TheoremId::thm31: return "thm31";
    case TheoremId::thm32: return "thm32";
    case TheoremId::thm33_1: return "thm33_1";
    case TheoremId::thm33_2: return "thm33_2";
    case TheoremId::thm33_3: return "thm33_3";
    case TheoremId::thm33_4: return "thm33_4";
    case TheoremId::thm33_5: return "thm33_5";
    case TheoremId::clim_trend: return "clim_trend";
    case TheoremId::cipu_m1: return "cipu_m1";
    case TheoremId::pop42_conditional: return "pop42_conditional";
  }
  return "?";
}

inline std::vector<TheoremId> all_theorem_ids() {
  return {TheoremId::cor24,   TheoremId::thm21,   TheoremId::thm22,
          TheoremId::thm23regimes, TheoremId::thm31, TheoremId::thm32,
          TheoremId::thm33_1, TheoremId::thm33_2, TheoremId::thm33_3,
          TheoremId::thm33_4, TheoremId::thm33_5, TheoremId::clim_trend,
          TheoremId::cipu_m1, TheoremId::pop42_conditional};
}

inline std::optional<TheoremId> theorem_id_from_name(std::string_view name) {
  for (TheoremId id : all_theorem_ids())
    if (name == theorem_id_name(id)) return id;
  return std::nullopt;
}

struct VerifyWindow {
  Int n_max = 60;
  Int nm_cap = 16;   // total-variable cap for enumeration-backed checks
  Int s_max = 40;
  std::vector<Int> trend_n = {50, 100, 200, 300};
  std::uint64_t max_cases = 100000000;  // stop and mark incomplete beyond this
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Violation {
  KeyValues data;
};

struct TheoremCheckReport {
  TheoremId id = TheoremId::cor24;
  KeyValues window;
  std::uint64_t cases_checked = 0;
  std::vector<Violation> violations;
  bool complete = true;
  bool conditional = false;
  std::vector<std::string> notes;
  double runtime_seconds = 0.0;  // shown in text output only, never serialized
  bool passed() const { return violations.empty(); }
};

/// One certified instance of the bounded-product conjecture: the product
/// at the threshold k, which dominates all larger k because every factor
/// strictly decreases in k.
struct ConjectureCase {
  ConjectureVariant variant = ConjectureVariant::a;
  Int s = 0;
  Int k_threshold = 0;
  bool threshold_certified = false;
  BigRat product;            // value at k_threshold
  bool holds = false;        // product <= 2
  bool monotone_confirmed = false;  // product at k_threshold+1 is smaller
};

inline std::vector<ConjectureCase> conjecture_certify(ConjectureVariant v, Int s_max) {
  std::vector<ConjectureCase> cases;
  cases.reserve(std::max<Int>(s_max, 0));
  for (Int s = 1; s <= s_max; ++s) {
    ConjectureCase c;
    c.variant = v;
    c.s = s;
    const GuardedFloorResult th = conjecture_threshold(v, s);
    c.k_threshold = th.value;
    c.threshold_certified = th.certified;
    c.product = conjecture_product(v, s, c.k_threshold);
    c.holds = c.product <= 2;
    c.monotone_confirmed = conjecture_product(v, s, c.k_threshold + 1) < c.product;
    cases.push_back(std::move(c));
  }
  return cases;
}

inline std::vector<ConjectureCase> conjecture_certify_all(Int s_max) {
  std::vector<ConjectureCase> cases;
  for (ConjectureVariant v : {ConjectureVariant::a, ConjectureVariant::b,
                              ConjectureVariant::c, ConjectureVariant::d}) {
    std::vector<ConjectureCase> part = conjecture_certify(v, s_max);
    cases.insert(cases.end(), part.begin(), part.end());
  }
  return cases;
}

enum class MRule { one, half, n, custom };

inline const char* m_rule_name(MRule rule) {
  switch (rule) {
    case MRule::one: return "one";
    case MRule::half: return "half";
    case MRule::n: return "n";
    case MRule::custom: return "custom";
  }
  return "?";
}

struct TrendRow {
  Int n = 0;
  Int m = 0;
  Int h = 0;
  BigRat ratio;  // h / n, exact
};

/// h(n, m(n))/n along a list of n values, with m(n) given by a rule.
inline std::vector<TrendRow> trend_ratios(const std::vector<Int>& n_list,
                                          MRule rule,
                                          const std::vector<Int>& custom_m = {},
                                          int jobs = 1) {
  if (rule == MRule::custom && custom_m.size() != n_list.size())
    throw std::domain_error("trend_ratios: custom m list must match n list");
  std::vector<TrendRow> rows(n_list.size());
  parallel_for_index(n_list.size(), jobs, [&](std::uint64_t i) {
    const Int n = n_list[i];
    Int m = 1;
    switch (rule) {
      case MRule::one: m = 1; break;
      case MRule::half: m = std::max<Int>(1, n / 2); break;
      case MRule::n: m = n; break;
      case MRule::custom: m = custom_m[i]; break;
    }
    if (n < 1 || m < 1 || m > n)
      throw std::domain_error("trend_ratios: need 1 <= m <= n");
    const Int h = quotient_hdepth_value(BipartiteCase(n, m));
    rows[i] = {n, m, h, BigRat(h, n)};
  });
  return rows;
}

namespace detail {

inline void put(KeyValues& kv, std::string key, std::string value) {
  kv.emplace_back(std::move(key), std::move(value));
}

inline std::string rat_str(const BigRat& r) {
  return r.str();
}

inline std::string join_ints(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

/// Largest N <= n_max such that rows 1..N contain at most `limit` cases,
/// where row n contributes `per_row(n)` cases.
template <class PerRow>
Int fit_rows(Int n_max, std::uint64_t limit, PerRow per_row) {
  Int n = 0;
  std::uint64_t used = 0;
  while (n < n_max) {
    const std::uint64_t next = used + static_cast<std::uint64_t>(per_row(n + 1));
    if (next > limit) break;
    used = next;
    ++n;
  }
  return n;
}

/// h(n, m) for all 1 <= m <= n <= n_max; rows[n][m], computed in parallel
/// over n.
inline std::vector<std::vector<Int>> hdepth_rows(Int n_max, int jobs) {
  std::vector<std::vector<Int>> rows(n_max + 1);
  parallel_for_index(static_cast<std::uint64_t>(std::max<Int>(n_max, 0)), jobs,
                     [&](std::uint64_t i) {
                       const Int n = static_cast<Int>(i) + 1;
                       auto& row = rows[n];
                       row.assign(n + 1, 0);
                       for (Int m = 1; m <= n; ++m)
                         row[m] = quotient_hdepth_value(BipartiteCase(n, m));
                     });
  return rows;
}

/// h(n, n) for 2 <= n <= n_max; diag[n], computed in parallel.
inline std::vector<Int> hdepth_diagonal(Int n_max, int jobs) {
  std::vector<Int> diag(std::max<Int>(n_max + 1, 2), 0);
  if (n_max < 2) return diag;
  parallel_for_index(static_cast<std::uint64_t>(n_max - 1), jobs,
                     [&](std::uint64_t i) {
                       const Int n = static_cast<Int>(i) + 2;
                       diag[n] = quotient_hdepth_value(BipartiteCase(n, n));
                     });
  return diag;
}

inline void note_budget(TheoremCheckReport& r, Int requested, Int effective) {
  if (effective < requested) {
    r.complete = false;
    r.notes.push_back("case budget exhausted: window truncated to n_max=" +
                      std::to_string(effective));
  }
}

/// Violation helper: recomputes h fresh so the report never echoes a
/// cached value.
inline Violation pair_violation(std::string claim, Int n, Int m,
                                std::string lhs_key, std::string lhs,
                                std::string rhs_key, std::string rhs) {
  Violation v;
  put(v.data, "claim", std::move(claim));
  put(v.data, "n", std::to_string(n));
  put(v.data, "m", std::to_string(m));
  put(v.data, std::move(lhs_key), std::move(lhs));
  put(v.data, std::move(rhs_key), std::move(rhs));
  return v;
}

inline Int fresh_h(Int n, Int m) {
  return quotient_hdepth_value(BipartiteCase(n, m));
}

}  // namespace detail

namespace checks {

inline TheoremCheckReport half_lower(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max =
      detail::fit_rows(w.n_max, w.max_cases, [](Int n) { return n; });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = 1; m <= n; ++m) {
      ++r.cases_checked;
      if (rows[n][m] < ceil_half(n))
        r.violations.push_back(detail::pair_violation(
            "h(n,m) >= ceil(n/2)", n, m, "h", std::to_string(detail::fresh_h(n, m)),
            "ceil(n/2)", std::to_string(ceil_half(n))));
    }
  return r;
}

inline TheoremCheckReport ideal_closed_form(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  detail::put(r.window, "nm_cap", std::to_string(w.nm_cap));
  std::vector<std::pair<Int, Int>> pairs;
  for (Int n = 1; n <= w.nm_cap - 1; ++n)
    for (Int m = 1; m <= n && n + m <= w.nm_cap; ++m) pairs.emplace_back(n, m);
  if (pairs.size() > w.max_cases) {
    pairs.resize(static_cast<std::size_t>(w.max_cases));
    r.complete = false;
    r.notes.push_back("case budget exhausted: pair list truncated");
  }
  std::vector<Int> oracle(pairs.size(), 0);
  parallel_for_index(pairs.size(), jobs, [&](std::uint64_t i) {
    const auto [n, m] = pairs[i];
    oracle[i] = hdepth_general(
        alpha_vector(bipartite_edge_pair_ideal(n, m), kMaxEnumVars));
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [n, m] = pairs[i];
    ++r.cases_checked;
    const Int expected = edge_ideal_hdepth(BipartiteCase(n, m));
    if (oracle[i] != expected)
      r.violations.push_back(detail::pair_violation(
          "hdepth(edge ideal) = floor((n+m+2)/2)", n, m, "enumerated",
          std::to_string(oracle[i]), "closed_form", std::to_string(expected)));
  }
  return r;
}

inline TheoremCheckReport sqrt_upper(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max =
      detail::fit_rows(w.n_max, w.max_cases, [](Int n) { return n; });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = 1; m <= n; ++m) {
      ++r.cases_checked;
      const Int bound = ceil_sqrt_upper_bound(n, m);
      if (rows[n][m] > bound)
        r.violations.push_back(detail::pair_violation(
            "h(n,m) <= ceil(n+m+1/2-sqrt(2nm+1/4))", n, m, "h",
            std::to_string(detail::fresh_h(n, m)), "bound", std::to_string(bound)));
    }
  return r;
}

inline TheoremCheckReport regimes(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max =
      detail::fit_rows(w.n_max, w.max_cases, [](Int n) { return n; });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = 1; m <= n; ++m) {
      ++r.cases_checked;
      const RegimeBounds regime = regime_classification(BipartiteCase(n, m));
      const Int h = rows[n][m];
      const bool low_ok = !regime.h_min || h >= *regime.h_min;
      if (!low_ok || h > regime.h_max)
        r.violations.push_back(detail::pair_violation(
            regime.narrow ? "n <= 2m-2 forces h <= m-1"
                          : "n >= 2m-1 forces m <= h <= n-m+1",
            n, m, "h", std::to_string(detail::fresh_h(n, m)), "allowed",
            (regime.h_min ? "[" + std::to_string(*regime.h_min) + "," : "[1,") +
                std::to_string(regime.h_max) + "]"));
    }
  return r;
}

inline TheoremCheckReport plateau(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  std::vector<std::pair<Int, Int>> pairs;
  for (Int n = 1; n <= w.n_max; ++n)
    for (Int m = 1; m <= n; ++m)
      if (central_plateau(BipartiteCase(n, m)).applies()) pairs.emplace_back(n, m);
  if (pairs.size() > w.max_cases) {
    pairs.resize(static_cast<std::size_t>(w.max_cases));
    r.complete = false;
    r.notes.push_back("case budget exhausted: pair list truncated");
  }
  std::vector<Int> hs(pairs.size(), 0);
  std::vector<int> first_order_fails(pairs.size(), 0);  // 1 matched, 0 no, -1 skipped
  parallel_for_index(pairs.size(), jobs, [&](std::uint64_t i) {
    const auto [n, m] = pairs[i];
    const BipartiteCase c(n, m);
    hs[i] = quotient_hdepth_value(c);
    if (hs[i] < c.total_vars()) {
      const CriterionProbe probe = criterion_holds(c, hs[i] + 1);
      bool contains_one = false;
      for (const CriterionTerm& t : probe.failures)
        if (t.ell == 1) contains_one = true;
      first_order_fails[i] = contains_one ? 1 : 0;
    } else {
      first_order_fails[i] = -1;
    }
  });
  std::uint64_t matched = 0, unmatched = 0, skipped = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [n, m] = pairs[i];
    ++r.cases_checked;
    const Int expected = central_plateau(BipartiteCase(n, m)).value;
    if (hs[i] != expected)
      r.violations.push_back(detail::pair_violation(
          "plateau predicate forces h = ceil(n/2)", n, m, "h",
          std::to_string(detail::fresh_h(n, m)), "ceil(n/2)",
          std::to_string(expected)));
    if (first_order_fails[i] == 1)
      ++matched;
    else if (first_order_fails[i] == 0)
      ++unmatched;
    else
      ++skipped;
  }
  r.notes.push_back("witness at q=h+1 fails at order l=1 in " +
                    std::to_string(matched) + "/" + std::to_string(matched + unmatched) +
                    " plateau cases (observation only; skipped " +
                    std::to_string(skipped) + ")");
  return r;
}

inline TheoremCheckReport diagonal_sandwich(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max = std::min<Int>(
      w.n_max, 1 + detail::fit_rows(std::max<Int>(w.n_max - 1, 0), w.max_cases,
                                    [](Int) { return 1; }));
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto diag = detail::hdepth_diagonal(n_max, jobs);
  // Observation: at q = h+1 the proof predicts the failing order
  // ceil(d/2) for even n and floor(d/2) for odd n, where d = q - floor(n/2).
  std::uint64_t matched = 0, unmatched = 0, skipped = 0;
  for (Int n = 2; n <= n_max; ++n) {
    ++r.cases_checked;
    const DiagonalBounds b = diagonal_bounds(n);
    if (!b.certified) {
      r.complete = false;
      r.notes.push_back("uncertified floor at n=" + std::to_string(n));
      continue;
    }
    if (diag[n] < b.lo || diag[n] > b.hi)
      r.violations.push_back(detail::pair_violation(
          "diagonal sandwich lo <= h(n,n) <= hi", n, n, "h",
          std::to_string(detail::fresh_h(n, n)),
          "bounds", "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]"));
    const BipartiteCase c(n, n);
    if (diag[n] >= c.total_vars()) {
      ++skipped;
      continue;
    }
    const Int q = diag[n] + 1;
    const Int d = q - n / 2;
    const Int predicted = n % 2 == 0 ? ceil_half(d) : floor_half(d);
    if (predicted < 1 || 2 * predicted > q) {
      ++skipped;
      continue;
    }
    bool contains = false;
    for (const CriterionTerm& t : criterion_holds(c, q).failures)
      if (t.ell == predicted) contains = true;
    contains ? ++matched : ++unmatched;
  }
  r.notes.push_back("witness at q=h+1 contains the predicted order in " +
                    std::to_string(matched) + "/" + std::to_string(matched + unmatched) +
                    " diagonal cases (observation only; skipped " +
                    std::to_string(skipped) + ")");
  return r;
}

inline TheoremCheckReport monotone_low(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max = detail::fit_rows(
      w.n_max, w.max_cases, [](Int n) { return std::max<Int>(n / 2 - 1, 0); });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = 1; m + 1 <= n / 2; ++m) {
      ++r.cases_checked;
      if (rows[n][m] < rows[n][m + 1])
        r.violations.push_back(detail::pair_violation(
            "h(n,m) >= h(n,m+1) for m+1 <= floor(n/2)", n, m, "h(n,m)",
            std::to_string(detail::fresh_h(n, m)), "h(n,m+1)",
            std::to_string(detail::fresh_h(n, m + 1))));
    }
  return r;
}

inline TheoremCheckReport monotone_high(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max = detail::fit_rows(
      w.n_max, w.max_cases, [](Int n) { return std::max<Int>(n - ceil_half(n), 0); });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = ceil_half(n); m + 1 <= n; ++m) {
      ++r.cases_checked;
      if (rows[n][m] > rows[n][m + 1])
        r.violations.push_back(detail::pair_violation(
            "h(n,m) <= h(n,m+1) for m >= ceil(n/2)", n, m, "h(n,m)",
            std::to_string(detail::fresh_h(n, m)), "h(n,m+1)",
            std::to_string(detail::fresh_h(n, m + 1))));
    }
  return r;
}

inline TheoremCheckReport central_value(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max = std::min<Int>(w.n_max, static_cast<Int>(w.max_cases));
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  std::vector<std::pair<Int, Int>> hs(n_max + 1, {0, 0});
  parallel_for_index(static_cast<std::uint64_t>(n_max), jobs, [&](std::uint64_t i) {
    const Int n = static_cast<Int>(i) + 1;
    const Int m_lo = std::max<Int>(1, n / 2);
    hs[n] = {quotient_hdepth_value(BipartiteCase(n, m_lo)),
             quotient_hdepth_value(BipartiteCase(n, ceil_half(n)))};
  });
  for (Int n = 1; n <= n_max; ++n) {
    ++r.cases_checked;
    const Int expected = ceil_half(n);
    if (hs[n].first != expected || hs[n].second != expected)
      r.violations.push_back(detail::pair_violation(
          "h(n,floor(n/2)) = h(n,ceil(n/2)) = ceil(n/2)", n, n / 2, "h",
          std::to_string(hs[n].first) + "," + std::to_string(hs[n].second),
          "ceil(n/2)", std::to_string(expected)));
  }
  return r;
}

inline TheoremCheckReport reflection(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max =
      detail::fit_rows(w.n_max, w.max_cases, [](Int n) { return n / 2; });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = 1; m <= n / 2; ++m) {
      ++r.cases_checked;
      if (rows[n][m] < rows[n][n - m])
        r.violations.push_back(detail::pair_violation(
            "h(n,m) >= h(n,n-m) for m <= floor(n/2)", n, m, "h(n,m)",
            std::to_string(detail::fresh_h(n, m)), "h(n,n-m)",
            std::to_string(detail::fresh_h(n, n - m))));
    }
  return r;
}

inline TheoremCheckReport star_envelope(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max =
      detail::fit_rows(w.n_max, w.max_cases, [](Int n) { return n; });
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto rows = detail::hdepth_rows(n_max, jobs);
  for (Int n = 1; n <= n_max; ++n)
    for (Int m = 1; m <= n; ++m) {
      ++r.cases_checked;
      if (rows[n][m] < n / 2 || rows[n][m] > rows[n][1])
        r.violations.push_back(detail::pair_violation(
            "floor(n/2) <= h(n,m) <= h(n,1)", n, m, "h",
            std::to_string(detail::fresh_h(n, m)),
            "envelope", "[" + std::to_string(n / 2) + "," +
                            std::to_string(rows[n][1]) + "]"));
    }
  return r;
}

inline TheoremCheckReport ratio_trend(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  std::vector<Int> anchors = w.trend_n;
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  if (anchors.empty() || anchors.front() < 2)
    throw std::domain_error("ratio_trend: trend anchors must be >= 2");
  detail::put(r.window, "trend_n", detail::join_ints(anchors));
  detail::put(r.window, "band", "[1/2, 31/50]");
  const Int n_star = anchors.back();
  const BigRat band_lo(1, 2), band_hi(31, 50);
  for (MRule rule : {MRule::one, MRule::half, MRule::n}) {
    const std::vector<TrendRow> rows = trend_ratios(anchors, rule, {}, jobs);
    const TrendRow& last = rows.back();
    ++r.cases_checked;
    if (last.ratio < band_lo || last.ratio > band_hi) {
      Violation v;
      detail::put(v.data, "claim", "h(n,m(n))/n within [1/2, 31/50] at n_star");
      detail::put(v.data, "m_rule", m_rule_name(rule));
      detail::put(v.data, "n", std::to_string(last.n));
      detail::put(v.data, "m", std::to_string(last.m));
      detail::put(v.data, "ratio", detail::rat_str(last.ratio));
      detail::put(v.data, "band", "[1/2, 31/50]");
      r.violations.push_back(std::move(v));
    }
    std::string note = std::string("m=") + m_rule_name(rule) + " ratios:";
    for (const TrendRow& row : rows)
      note += " h(" + std::to_string(row.n) + ")/n=" + detail::rat_str(row.ratio);
    r.notes.push_back(std::move(note));
  }
  // Normalized widths of the two bound intervals must not grow along the
  // anchor list.  Ties occur (the diagonal width is 1/50 at both n=50 and
  // n=100), so the claim is non-strict.
  std::vector<BigRat> width_mid, width_diag;
  for (Int n : anchors) {
    width_mid.emplace_back(
        BigRat(ceil_sqrt_upper_bound(n, std::max<Int>(1, n / 2)) - ceil_half(n), n));
    const DiagonalBounds b = diagonal_bounds(n);
    width_diag.emplace_back(BigRat(b.hi - b.lo, n));
  }
  auto check_widths = [&](const char* family, const std::vector<BigRat>& widths) {
    std::string note = std::string(family) + " widths:";
    for (std::size_t i = 0; i < widths.size(); ++i)
      note += " " + detail::rat_str(widths[i]);
    r.notes.push_back(std::move(note));
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
      ++r.cases_checked;
      if (widths[i + 1] > widths[i]) {
        Violation v;
        detail::put(v.data, "claim",
                    "normalized bound width non-increasing along trend anchors");
        detail::put(v.data, "family", family);
        detail::put(v.data, "n_from", std::to_string(anchors[i]));
        detail::put(v.data, "n_to", std::to_string(anchors[i + 1]));
        detail::put(v.data, "width_from", detail::rat_str(widths[i]));
        detail::put(v.data, "width_to", detail::rat_str(widths[i + 1]));
        r.violations.push_back(std::move(v));
      }
    }
  };
  check_widths("half_case", width_mid);
  check_widths("diagonal", width_diag);
  return r;
}

inline TheoremCheckReport star_lower(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  const Int n_max = std::min<Int>(w.n_max, static_cast<Int>(w.max_cases));
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  std::vector<Int> hs(n_max + 1, 0);
  parallel_for_index(static_cast<std::uint64_t>(n_max), jobs, [&](std::uint64_t i) {
    const Int n = static_cast<Int>(i) + 1;
    hs[n] = quotient_hdepth_value(BipartiteCase(n, 1));
  });
  for (Int n = 1; n <= n_max; ++n) {
    ++r.cases_checked;
    const Int bound = star_lower_bound(n);
    if (hs[n] < bound)
      r.violations.push_back(detail::pair_violation(
          "h(n,1) >= ceil(n/2) + floor(sqrt(n)) - 2", n, 1, "h",
          std::to_string(detail::fresh_h(n, 1)), "bound", std::to_string(bound)));
  }
  return r;
}

inline TheoremCheckReport diagonal_conjectured(const VerifyWindow& w, int jobs) {
  TheoremCheckReport r;
  r.conditional = true;
  const Int n_max = std::min<Int>(
      w.n_max, 1 + std::min<Int>(std::max<Int>(w.n_max - 1, 0),
                                 static_cast<Int>(w.max_cases)));
  detail::put(r.window, "n_max", std::to_string(w.n_max));
  detail::note_budget(r, w.n_max, n_max);
  const auto diag = detail::hdepth_diagonal(n_max, jobs);
  // Certificates of the bounded-product conjecture needed by this window,
  // keyed by (variant, s); s = 0 cases are empty or single-factor products
  // and hold without the conjecture.
  std::map<std::pair<char, Int>, std::vector<Int>> needed;
  std::uint64_t trivial = 0;
  for (Int n = 2; n <= n_max; ++n) {
    ++r.cases_checked;
    const GuardedFloorResult bound = diagonal_conjectured_bound(n);
    if (!bound.certified) {
      r.complete = false;
      r.notes.push_back("uncertified floor at n=" + std::to_string(n));
      continue;
    }
    if (diag[n] < bound.value)
      r.violations.push_back(detail::pair_violation(
          "h(n,n) >= floor((n-1)/2 + sqrt(floor(n/2) ln 2))", n, n, "h",
          std::to_string(detail::fresh_h(n, n)), "bound",
          std::to_string(bound.value)));
    const DiagonalBounds unconditional = diagonal_bounds(n);
    if (bound.value < unconditional.lo)
      r.violations.push_back(detail::pair_violation(
          "conjectured bound is at least the unconditional one", n, n,
          "conjectured", std::to_string(bound.value), "unconditional",
          std::to_string(unconditional.lo)));
    const Int k = n / 2;
    const GuardedFloorResult f =
        floor_half_plus_sqrt_ln2(n % 2 == 0 ? -1 : 0, k);
    if (!f.certified) {
      r.complete = false;
      r.notes.push_back("uncertified case split at n=" + std::to_string(n));
      continue;
    }
    if (bound.value != k + f.value)
      r.violations.push_back(detail::pair_violation(
          "case split is consistent with the bound", n, n, "bound",
          std::to_string(bound.value), "k+f", std::to_string(k + f.value)));
    if (f.value <= 1) {
      ++trivial;  // s = 0
      continue;
    }
    const Int s = f.value / 2;
    ConjectureVariant variant;
    if (n % 2 == 0)
      variant = f.value % 2 == 0 ? ConjectureVariant::a : ConjectureVariant::b;
    else
      variant = f.value % 2 == 0 ? ConjectureVariant::c : ConjectureVariant::d;
    needed[{conjecture_variant_char(variant), s}].push_back(n);
  }
  std::uint64_t used_certs = 0;
  for (const auto& [key, ns] : needed) {
    const auto [vc, s] = key;
    const ConjectureVariant variant = conjecture_variant_from_char(vc);
    const GuardedFloorResult th = conjecture_threshold(variant, s);
    const BigRat product = conjecture_product(variant, s, th.value);
    const bool ok = th.certified && product <= 2 &&
                    conjecture_product(variant, s, th.value + 1) < product;
    if (!ok) {
      r.complete = false;
      r.notes.push_back(std::string("missing certificate for variant ") + vc +
                        ", s=" + std::to_string(s));
      continue;
    }
    ++used_certs;
    for (Int n : ns) {
      const Int k = n / 2;
      if (k < th.value)
        r.violations.push_back(detail::pair_violation(
            "window case lies above the certificate threshold", n, n, "k",
            std::to_string(k), "k_threshold", std::to_string(th.value)));
    }
    r.notes.push_back(std::string("certificate variant ") + vc + ", s=" +
                      std::to_string(s) + ": product at k=" +
                      std::to_string(th.value) + " is " +
                      detail::rat_str(product) + " <= 2, covering " +
                      std::to_string(ns.size()) + " diagonal cases");
  }
  r.notes.push_back(std::to_string(trivial) +
                    " cases need no certificate (empty or single-factor product)");
  r.notes.push_back("conditional: relies on " + std::to_string(used_certs) +
                    " certified conjecture instances, not a proof");
  return r;
}

}  // namespace checks

inline TheoremCheckReport verify(TheoremId id, const VerifyWindow& w = {},
                                 int jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  TheoremCheckReport r;
  switch (id) {
    case TheoremId::cor24: r = checks::half_lower(w, jobs); break;
    case TheoremId::thm21: r = checks::ideal_closed_form(w, jobs); break;
    case TheoremId::thm22: r = checks::sqrt_upper(w, jobs); break;
    case TheoremId::thm23regimes: r = checks::regimes(w, jobs); break;
    case TheoremId::thm31: r = checks::plateau(w, jobs); break;
    case TheoremId::thm32: r = checks::diagonal_sandwich(w, jobs); break;
    case TheoremId::thm33_1: r = checks::monotone_low(w, jobs); break;
    case TheoremId::thm33_2: r = checks::monotone_high(w, jobs); break;
    case TheoremId::thm33_3: r = checks::central_value(w, jobs); break;
    case TheoremId::thm33_4: r = checks::reflection(w, jobs); break;
    case TheoremId::thm33_5: r = checks::star_envelope(w, jobs); break;
    case TheoremId::clim_trend: r = checks::ratio_trend(w, jobs); break;
    case TheoremId::cipu_m1: r = checks::star_lower(w, jobs); break;
    case TheoremId::pop42_conditional: r = checks::diagonal_conjectured(w, jobs); break;
  }
  r.id = id;
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace hdepth
