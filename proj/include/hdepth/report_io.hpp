#pragma once

// Report rendering.
//
// JSON output is byte-deterministic: ordered keys, no timestamps, no
// runtimes, numbers only for machine-word values and decimal strings for
// anything arbitrary-precision.  Runtimes appear in text output only.
// Rational decimals are truncated, not rounded, so they never depend on
// floating-point formatting.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdepth/bipartite.hpp"
#include "hdepth/sqfree.hpp"
#include "hdepth/verifier.hpp"

namespace hdepth {

using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline std::string rat_decimal(const BigRat& r, int digits = 6) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string out;
  if (num < 0) {
    out += "-";
    num = -num;
  }
  out += BigInt(num / den).str();
  out += ".";
  BigInt rem = num % den;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + BigInt(rem / den).convert_to<int>());
    rem %= den;
  }
  return out;
}

inline std::string runtime_str(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  return std::string(buf);
}

inline OrderedJson keyvalues_json(const KeyValues& kv) {
  OrderedJson obj = OrderedJson::object();
  for (const auto& [key, value] : kv) obj[key] = value;
  return obj;
}

inline std::string keyvalues_text(const KeyValues& kv) {
  std::string out;
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) out += " ";
    out += kv[i].first + "=" + kv[i].second;
  }
  return out;
}

inline OrderedJson probe_json(const CriterionProbe& probe) {
  OrderedJson obj = OrderedJson::object();
  obj["q"] = probe.q;
  OrderedJson failures = OrderedJson::array();
  for (const CriterionTerm& t : probe.failures) {
    OrderedJson term = OrderedJson::object();
    term["order"] = t.ell;
    term["lhs_n"] = t.lhs_n.str();
    term["lhs_m"] = t.lhs_m.str();
    term["rhs"] = t.rhs.str();
    failures.push_back(std::move(term));
  }
  obj["failures"] = std::move(failures);
  return obj;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single bipartite case

inline OrderedJson hdepth_report_json(const HdepthReport& r) {
  OrderedJson obj = OrderedJson::object();
  obj["n"] = r.input.n();
  obj["m"] = r.input.m();
  obj["h"] = r.h;
  obj["lower_half"] = r.lower_half;
  obj["upper_sqrt"] = r.upper_sqrt;
  obj["ideal_hdepth"] = r.ideal_hdepth;
  obj["plateau_applies"] = r.plateau.applies();
  if (r.plateau.applies())
    obj["plateau_value"] = r.plateau.value;
  else
    obj["plateau_value"] = nullptr;
  if (r.diagonal) {
    OrderedJson d = OrderedJson::object();
    d["lo"] = r.diagonal->lo;
    d["hi"] = r.diagonal->hi;
    d["certified"] = r.diagonal->certified;
    obj["diagonal_bounds"] = std::move(d);
  } else {
    obj["diagonal_bounds"] = nullptr;
  }
  OrderedJson regime = OrderedJson::object();
  regime["narrow"] = r.regime.narrow;
  if (r.regime.h_min)
    regime["h_min"] = *r.regime.h_min;
  else
    regime["h_min"] = nullptr;
  regime["h_max"] = r.regime.h_max;
  obj["regime"] = std::move(regime);
  obj["witness_at_h"] = detail::probe_json(r.witness_at_h);
  if (r.witness_above)
    obj["witness_above"] = detail::probe_json(*r.witness_above);
  else
    obj["witness_above"] = nullptr;
  return obj;
}

inline std::string hdepth_report_text(const HdepthReport& r) {
  std::string out;
  out += "n              " + std::to_string(r.input.n()) + "\n";
  out += "m              " + std::to_string(r.input.m()) + "\n";
  out += "h              " + std::to_string(r.h) + "\n";
  out += "lower_half     " + std::to_string(r.lower_half) + "\n";
  out += "upper_sqrt     " + std::to_string(r.upper_sqrt) + "\n";
  out += "ideal_hdepth   " + std::to_string(r.ideal_hdepth) + "\n";
  out += "plateau        ";
  if (r.plateau.applies())
    out += "applies, h = " + std::to_string(r.plateau.value) +
           " (s=" + std::to_string(r.plateau.s) +
           ", t=" + std::to_string(r.plateau.t) +
           ", predicate=" + std::to_string(r.plateau.predicate_value) + ")\n";
  else
    out += "does not apply (predicate=" +
           std::to_string(r.plateau.predicate_value) + ")\n";
  if (r.diagonal)
    out += "diagonal       [" + std::to_string(r.diagonal->lo) + ", " +
           std::to_string(r.diagonal->hi) + "]" +
           (r.diagonal->certified ? " certified" : " UNCERTIFIED") + "\n";
  out += "regime         ";
  if (r.regime.narrow)
    out += "narrow (n <= 2m-2): h <= " + std::to_string(r.regime.h_max) + "\n";
  else
    out += "wide (n >= 2m-1): " + std::to_string(*r.regime.h_min) +
           " <= h <= " + std::to_string(r.regime.h_max) + "\n";
  out += "witness        criterion passes at q = " + std::to_string(r.h) + "\n";
  if (r.witness_above) {
    out += "first failure  q = " + std::to_string(r.witness_above->q) + ":";
    for (const CriterionTerm& t : r.witness_above->failures)
      out += " [order " + std::to_string(t.ell) + ": " + t.lhs_n.str() + "+" +
             t.lhs_m.str() + " < " + t.rhs.str() + "]";
    out += "\n";
  }
  return out;
}

inline std::string hdepth_report_csv(const HdepthReport& r) {
  std::string out =
      "n,m,h,lower_half,upper_sqrt,ideal_hdepth,plateau_applies,plateau_value\n";
  out += std::to_string(r.input.n()) + "," + std::to_string(r.input.m()) + "," +
         std::to_string(r.h) + "," + std::to_string(r.lower_half) + "," +
         std::to_string(r.upper_sqrt) + "," + std::to_string(r.ideal_hdepth) +
         "," + (r.plateau.applies() ? "true" : "false") + "," +
         (r.plateau.applies() ? std::to_string(r.plateau.value) : "") + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Scans

struct ScanRow {
  Int n = 0;
  Int m = 0;
  Int h = 0;
  Int lower_half = 0;
  Int upper_sqrt = 0;
  bool plateau_applies = false;
  Int plateau_value = 0;
};

inline ScanRow make_scan_row(Int n, Int m) {
  const BipartiteCase c(n, m);
  const PlateauProbe p = central_plateau(c);
  return {n,
          m,
          quotient_hdepth_value(c),
          half_lower_bound(c),
          sqrt_upper_bound(c),
          p.applies(),
          p.value};
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "n,m,h,lower_half,upper_sqrt,plateau_applies,plateau_value\n";
  for (const ScanRow& r : rows)
    out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::to_string(r.h) + "," + std::to_string(r.lower_half) + "," +
           std::to_string(r.upper_sqrt) + "," +
           (r.plateau_applies ? "true" : "false") + "," +
           (r.plateau_applies ? std::to_string(r.plateau_value) : "") + "\n";
  return out;
}

inline std::string scan_text(const std::vector<ScanRow>& rows) {
  std::string out = "    n     m     h  lower upper plateau\n";
  char buf[96];
  for (const ScanRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%5lld %5lld %5lld %6lld %5lld %s\n",
                  static_cast<long long>(r.n), static_cast<long long>(r.m),
                  static_cast<long long>(r.h),
                  static_cast<long long>(r.lower_half),
                  static_cast<long long>(r.upper_sqrt),
                  r.plateau_applies ? std::to_string(r.plateau_value).c_str()
                                    : "-");
    out += buf;
  }
  return out;
}

inline OrderedJson scan_json(const std::vector<ScanRow>& rows) {
  OrderedJson arr = OrderedJson::array();
  for (const ScanRow& r : rows) {
    OrderedJson obj = OrderedJson::object();
    obj["n"] = r.n;
    obj["m"] = r.m;
    obj["h"] = r.h;
    obj["lower_half"] = r.lower_half;
    obj["upper_sqrt"] = r.upper_sqrt;
    obj["plateau_applies"] = r.plateau_applies;
    if (r.plateau_applies)
      obj["plateau_value"] = r.plateau_value;
    else
      obj["plateau_value"] = nullptr;
    arr.push_back(std::move(obj));
  }
  return arr;
}

/// Ready-to-pipe gnuplot block of h/n against n.
inline std::string scan_gnuplot(const std::vector<ScanRow>& rows) {
  std::string out;
  out += "set xlabel \"n\"\n";
  out += "set ylabel \"h/n\"\n";
  out += "set yrange [0:1]\n";
  out += "plot '-' using 1:2 with linespoints title \"h(n,m)/n\"\n";
  for (const ScanRow& r : rows)
    out += std::to_string(r.n) + " " +
           detail::rat_decimal(BigRat(r.h, r.n), 6) + "\n";
  out += "e\n";
  return out;
}

// ---------------------------------------------------------------------------
// Claim checks

inline OrderedJson theorem_report_json(const TheoremCheckReport& r) {
  OrderedJson obj = OrderedJson::object();
  obj["check"] = theorem_id_name(r.id);
  obj["window"] = detail::keyvalues_json(r.window);
  obj["cases_checked"] = r.cases_checked;
  OrderedJson violations = OrderedJson::array();
  for (const Violation& v : r.violations)
    violations.push_back(detail::keyvalues_json(v.data));
  obj["violations"] = std::move(violations);
  obj["complete"] = r.complete;
  obj["conditional"] = r.conditional;
  OrderedJson notes = OrderedJson::array();
  for (const std::string& note : r.notes) notes.push_back(note);
  obj["notes"] = std::move(notes);
  return obj;
}

inline OrderedJson theorem_reports_json(const std::vector<TheoremCheckReport>& rs) {
  OrderedJson arr = OrderedJson::array();
  for (const TheoremCheckReport& r : rs) arr.push_back(theorem_report_json(r));
  return arr;
}

inline std::string theorem_report_text(const TheoremCheckReport& r) {
  std::string out;
  out += std::string("check ") + theorem_id_name(r.id) + "\n";
  out += "  window:        " + detail::keyvalues_text(r.window) + "\n";
  out += "  cases checked: " + std::to_string(r.cases_checked) + "\n";
  out += "  violations:    " + std::to_string(r.violations.size()) + "\n";
  for (const Violation& v : r.violations)
    out += "    " + detail::keyvalues_text(v.data) + "\n";
  out += std::string("  complete:      ") + (r.complete ? "yes" : "NO") + "\n";
  if (r.conditional) out += "  conditional:   yes\n";
  for (const std::string& note : r.notes) out += "  note: " + note + "\n";
  out += "  runtime:       " + detail::runtime_str(r.runtime_seconds) + " s\n";
  return out;
}

inline std::string theorem_reports_text(const std::vector<TheoremCheckReport>& rs) {
  std::string out;
  std::size_t total_violations = 0;
  for (const TheoremCheckReport& r : rs) {
    out += theorem_report_text(r);
    total_violations += r.violations.size();
  }
  if (rs.size() > 1)
    out += "total: " + std::to_string(total_violations) + " violations in " +
           std::to_string(rs.size()) + " checks\n";
  return out;
}

inline std::string theorem_reports_csv(const std::vector<TheoremCheckReport>& rs) {
  std::string out = "check,cases_checked,violations,complete,conditional\n";
  for (const TheoremCheckReport& r : rs)
    out += std::string(theorem_id_name(r.id)) + "," +
           std::to_string(r.cases_checked) + "," +
           std::to_string(r.violations.size()) + "," +
           (r.complete ? "true" : "false") + "," +
           (r.conditional ? "true" : "false") + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture certificates

inline OrderedJson conjecture_json(const std::vector<ConjectureCase>& cases) {
  OrderedJson arr = OrderedJson::array();
  for (const ConjectureCase& c : cases) {
    OrderedJson obj = OrderedJson::object();
    obj["variant"] = std::string(1, conjecture_variant_char(c.variant));
    obj["s"] = c.s;
    obj["k_threshold"] = c.k_threshold;
    obj["threshold_certified"] = c.threshold_certified;
    obj["product"] = detail::rat_str(c.product);
    obj["product_decimal"] = detail::rat_decimal(c.product, 9);
    obj["holds"] = c.holds;
    obj["monotone_confirmed"] = c.monotone_confirmed;
    arr.push_back(std::move(obj));
  }
  return arr;
}

inline std::string conjecture_csv(const std::vector<ConjectureCase>& cases) {
  std::string out =
      "variant,s,k_threshold,threshold_certified,product,product_decimal,holds,"
      "monotone_confirmed\n";
  for (const ConjectureCase& c : cases)
    out += std::string(1, conjecture_variant_char(c.variant)) + "," +
           std::to_string(c.s) + "," + std::to_string(c.k_threshold) + "," +
           (c.threshold_certified ? "true" : "false") + "," +
           detail::rat_str(c.product) + "," +
           detail::rat_decimal(c.product, 9) + "," +
           (c.holds ? "true" : "false") + "," +
           (c.monotone_confirmed ? "true" : "false") + "\n";
  return out;
}

inline std::string conjecture_text(const std::vector<ConjectureCase>& cases) {
  std::string out =
      "variant     s  k_threshold  product (<= 2 ?)         monotone\n";
  char buf[160];
  std::size_t failures = 0;
  for (const ConjectureCase& c : cases) {
    std::snprintf(buf, sizeof(buf), "      %c %5lld %12lld  %-12s %-10s %s\n",
                  conjecture_variant_char(c.variant),
                  static_cast<long long>(c.s),
                  static_cast<long long>(c.k_threshold),
                  detail::rat_decimal(c.product, 9).c_str(),
                  c.holds ? "holds" : "FAILS",
                  c.monotone_confirmed ? "yes" : "NO");
    out += buf;
    if (!c.holds || !c.threshold_certified || !c.monotone_confirmed) ++failures;
  }
  out += std::to_string(cases.size()) + " certificates, " +
         std::to_string(failures) + " failures\n";
  return out;
}

// ---------------------------------------------------------------------------
// Generic squarefree pairs

struct GeneralReport {
  Int num_vars = 0;
  AlphaVector alpha;
  Int h = 0;
  BetaTable beta_at_h;
  bool has_failure = false;  // false when h = num_vars
  Int failure_q = 0;
  Int failure_k = 0;
  BigInt failure_beta;
};

inline GeneralReport make_general_report(const SqfreeIdealPair& pair,
                                         int cap = kDefaultEnumCap,
                                         int jobs = 1) {
  GeneralReport r;
  r.num_vars = pair.num_vars();
  r.alpha = alpha_vector(pair, cap, jobs);
  r.h = hdepth_general(r.alpha);
  r.beta_at_h = beta_table(r.h, r.alpha);
  if (r.h < r.num_vars) {
    const BetaTable above = beta_table(r.h + 1, r.alpha);
    for (Int k = 0; k <= above.q; ++k)
      if (above.beta[k] < 0) {
        r.has_failure = true;
        r.failure_q = above.q;
        r.failure_k = k;
        r.failure_beta = above.beta[k];
        break;
      }
  }
  return r;
}

inline OrderedJson general_report_json(const GeneralReport& r) {
  OrderedJson obj = OrderedJson::object();
  obj["num_vars"] = r.num_vars;
  OrderedJson alpha = OrderedJson::array();
  for (const BigInt& a : r.alpha.alpha) alpha.push_back(a.str());
  obj["alpha"] = std::move(alpha);
  obj["hdepth"] = r.h;
  OrderedJson beta = OrderedJson::array();
  for (const BigInt& b : r.beta_at_h.beta) beta.push_back(b.str());
  obj["beta_at_hdepth"] = std::move(beta);
  if (r.has_failure) {
    OrderedJson f = OrderedJson::object();
    f["q"] = r.failure_q;
    f["k"] = r.failure_k;
    f["beta"] = r.failure_beta.str();
    obj["first_failure_above"] = std::move(f);
  } else {
    obj["first_failure_above"] = nullptr;
  }
  return obj;
}

inline std::string general_report_text(const GeneralReport& r) {
  std::string out;
  out += "num_vars  " + std::to_string(r.num_vars) + "\n";
  out += "alpha    ";
  for (const BigInt& a : r.alpha.alpha) out += " " + a.str();
  out += "\n";
  out += "hdepth    " + std::to_string(r.h) + "\n";
  out += "beta(q=h)";
  for (const BigInt& b : r.beta_at_h.beta) out += " " + b.str();
  out += "\n";
  if (r.has_failure)
    out += "first failing entry above: q=" + std::to_string(r.failure_q) +
           " k=" + std::to_string(r.failure_k) + " beta=" +
           r.failure_beta.str() + "\n";
  else
    out += "no q above hdepth (hdepth equals num_vars)\n";
  return out;
}

inline std::string general_report_csv(const GeneralReport& r) {
  std::string out = "num_vars,hdepth,failure_q,failure_k,failure_beta\n";
  out += std::to_string(r.num_vars) + "," + std::to_string(r.h) + ",";
  if (r.has_failure)
    out += std::to_string(r.failure_q) + "," + std::to_string(r.failure_k) +
           "," + r.failure_beta.str();
  else
    out += ",,";
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Trend rows

inline std::string trend_csv(const std::vector<TrendRow>& rows) {
  std::string out = "n,m,h,ratio,ratio_decimal\n";
  for (const TrendRow& r : rows)
    out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::to_string(r.h) + "," + detail::rat_str(r.ratio) + "," +
           detail::rat_decimal(r.ratio, 6) + "\n";
  return out;
}

}  // namespace hdepth
