// hdepth command line tool.
//
// Subcommands:
//   bipartite   depth of one case, with bounds and criterion witnesses
//   scan        tables of h(n,m) over ranges of n and m
//   verify      run one claim check (or a family) over a finite window
//   conjecture  certify the bounded-product conjecture up to s_max
//   general     depth of an arbitrary squarefree ideal pair from JSON
//
// Exit codes: 0 success, 1 violations found, 2 usage or input error,
// 3 check incomplete (budget or certification).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdepth/hdepth.hpp"

namespace {

using hdepth::Int;

int emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  out << content;
  return 0;
}

std::optional<std::pair<Int, Int>> parse_range(const std::string& spec) {
  try {
    const std::size_t dots = spec.find("..");
    if (dots == std::string::npos) {
      const Int v = std::stoll(spec);
      return std::make_pair(v, v);
    }
    const Int lo = std::stoll(spec.substr(0, dots));
    const Int hi = std::stoll(spec.substr(dots + 2));
    return std::make_pair(lo, hi);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int enum_cap_from_env() {
  const char* raw = std::getenv("HDEPTH_ENUM_CAP");
  if (!raw) return hdepth::kDefaultEnumCap;
  try {
    const int cap = std::stoi(raw);
    if (cap < 1 || cap > hdepth::kMaxEnumVars) throw std::out_of_range("cap");
    return cap;
  } catch (const std::exception&) {
    throw CLI::ValidationError("HDEPTH_ENUM_CAP must be an integer in [1, " +
                               std::to_string(hdepth::kMaxEnumVars) + "]");
  }
}

int run_bipartite(Int n, Int m, const std::string& format,
                  const std::string& output) {
  const hdepth::HdepthReport report = hdepth::quotient_hdepth({n, m});
  if (format == "json") return emit(hdepth::hdepth_report_json(report).dump() + "\n", output);
  if (format == "csv") return emit(hdepth::hdepth_report_csv(report), output);
  return emit(hdepth::hdepth_report_text(report), output);
}

int run_scan(const std::string& n_spec, const std::string& m_spec,
             const std::string& format, const std::string& output, int jobs,
             bool gnuplot) {
  const auto n_range = parse_range(n_spec);
  if (!n_range) {
    std::cerr << "error: bad range for --n: " << n_spec << "\n";
    return 2;
  }
  std::vector<std::pair<Int, Int>> pairs;
  for (Int n = std::max<Int>(1, n_range->first); n <= n_range->second; ++n) {
    Int m_lo = 0, m_hi = -1;
    if (m_spec == "half") {
      m_lo = m_hi = std::max<Int>(1, n / 2);
    } else if (m_spec == "equal") {
      m_lo = m_hi = n;
    } else if (m_spec == "one") {
      m_lo = m_hi = 1;
    } else {
      const auto m_range = parse_range(m_spec);
      if (!m_range) {
        std::cerr << "error: bad spec for --m: " << m_spec << "\n";
        return 2;
      }
      m_lo = std::max<Int>(1, m_range->first);
      m_hi = std::min<Int>(n, m_range->second);
    }
    for (Int m = m_lo; m <= m_hi; ++m) pairs.emplace_back(n, m);
  }
  std::vector<hdepth::ScanRow> rows(pairs.size());
  hdepth::parallel_for_index(pairs.size(), jobs, [&](std::uint64_t i) {
    rows[i] = hdepth::make_scan_row(pairs[i].first, pairs[i].second);
  });
  if (gnuplot) return emit(hdepth::scan_gnuplot(rows), output);
  if (format == "json") return emit(hdepth::scan_json(rows).dump() + "\n", output);
  if (format == "text") return emit(hdepth::scan_text(rows), output);
  return emit(hdepth::scan_csv(rows), output);
}

std::optional<std::vector<hdepth::TheoremId>> claim_list(const std::string& token) {
  using hdepth::TheoremId;
  if (token == "all") return hdepth::all_theorem_ids();
  if (token == "t1" || token == "t31") return {{TheoremId::thm31}};
  if (token == "t2" || token == "t32") return {{TheoremId::thm32}};
  if (token == "t3" || token == "t33" || token == "thm33")
    return {{TheoremId::thm33_1, TheoremId::thm33_2, TheoremId::thm33_3,
             TheoremId::thm33_4, TheoremId::thm33_5}};
  if (token == "t21") return {{TheoremId::thm21}};
  if (token == "t22") return {{TheoremId::thm22}};
  if (token == "regimes") return {{TheoremId::thm23regimes}};
  if (token == "trend") return {{TheoremId::clim_trend}};
  if (token == "cipu") return {{TheoremId::cipu_m1}};
  if (token == "pop" || token == "pop42") return {{TheoremId::pop42_conditional}};
  if (const auto id = hdepth::theorem_id_from_name(token)) return {{*id}};
  return std::nullopt;
}

int conjecture_exit_code(const std::vector<hdepth::ConjectureCase>& cases) {
  bool incomplete = false;
  for (const hdepth::ConjectureCase& c : cases) {
    if (!c.holds || !c.monotone_confirmed) return 1;
    if (!c.threshold_certified) incomplete = true;
  }
  return incomplete ? 3 : 0;
}

int run_conjecture(Int s_max, const std::string& format,
                   const std::string& output) {
  const std::vector<hdepth::ConjectureCase> cases =
      hdepth::conjecture_certify_all(s_max);
  int rc = 0;
  if (format == "json")
    rc = emit(hdepth::conjecture_json(cases).dump() + "\n", output);
  else if (format == "csv")
    rc = emit(hdepth::conjecture_csv(cases), output);
  else
    rc = emit(hdepth::conjecture_text(cases), output);
  return rc != 0 ? rc : conjecture_exit_code(cases);
}

int run_verify(const std::string& token, const hdepth::VerifyWindow& window,
               int jobs, const std::string& format, const std::string& output,
               Int s_max) {
  if (token == "conjecture") return run_conjecture(s_max, format, output);
  const auto ids = claim_list(token);
  if (!ids) {
    std::cerr << "error: unknown claim id: " << token << "\n";
    return 2;
  }
  std::vector<hdepth::TheoremCheckReport> reports;
  reports.reserve(ids->size());
  for (const hdepth::TheoremId id : *ids)
    reports.push_back(hdepth::verify(id, window, jobs));
  int rc = 0;
  if (format == "json")
    rc = emit(hdepth::theorem_reports_json(reports).dump() + "\n", output);
  else if (format == "csv")
    rc = emit(hdepth::theorem_reports_csv(reports), output);
  else
    rc = emit(hdepth::theorem_reports_text(reports), output);
  if (rc != 0) return rc;
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  for (const auto& r : reports)
    if (!r.complete) return 3;
  return 0;
}

int run_general(const std::string& path, const std::string& format,
                const std::string& output, int jobs) {
  try {
    const hdepth::SqfreeIdealPair pair = hdepth::load_ideal_pair_file(path);
    const hdepth::GeneralReport report =
        hdepth::make_general_report(pair, enum_cap_from_env(), jobs);
    if (format == "json")
      return emit(hdepth::general_report_json(report).dump() + "\n", output);
    if (format == "csv") return emit(hdepth::general_report_csv(report), output);
    return emit(hdepth::general_report_text(report), output);
  } catch (const hdepth::ideal_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert depth of quotients by bipartite edge ideals"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", output, "write output to a file");
  };

  Int n = 0, m = 0;
  CLI::App* bipartite = app.add_subcommand("bipartite", "depth of one case");
  bipartite->add_option("-n,--n", n, "size of the first block")->required();
  bipartite->add_option("-m,--m", m, "size of the second block")->required();
  add_common(bipartite);

  std::string n_spec, m_spec = "half";
  bool gnuplot = false;
  CLI::App* scan = app.add_subcommand("scan", "tables over ranges");
  scan->add_option("--n", n_spec, "n range, e.g. 2..20 or 10")->required();
  scan->add_option("--m", m_spec,
                   "m spec: half, equal, one, a single value, or a range")
      ->capture_default_str();
  scan->add_flag("--gnuplot", gnuplot, "emit a gnuplot block of h/n");
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_common(scan);

  std::string claim;
  hdepth::VerifyWindow window;
  Int s_max = 40;
  CLI::App* verify = app.add_subcommand("verify", "run claim checks");
  verify
      ->add_option("claim", claim,
                   "claim id (cor24, thm21, thm22, thm23regimes, thm31, thm32, "
                   "thm33_1..thm33_5, clim_trend, cipu_m1, pop42_conditional), "
                   "an alias (t1, t2, t3, t21, t22, regimes, trend, cipu, pop), "
                   "conjecture, or all")
      ->required();
  verify->add_option("--n-max", window.n_max, "window bound on n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--nm-cap", window.nm_cap,
                     "total-variable cap for enumeration-backed checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--s-max", s_max, "conjecture certification bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--max-cases", window.max_cases, "case budget")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_common(verify);

  Int conj_s_max = 40;
  CLI::App* conjecture =
      app.add_subcommand("conjecture", "certify the bounded-product conjecture");
  conjecture->add_option("--s-max", conj_s_max, "largest s to certify")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(conjecture);

  std::string ideal_path;
  CLI::App* general =
      app.add_subcommand("general", "depth of a squarefree ideal pair");
  general->add_option("file", ideal_path, "ideal pair JSON file")->required();
  general->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_common(general);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bipartite->parsed()) return run_bipartite(n, m, format, output);
    if (scan->parsed()) return run_scan(n_spec, m_spec, format, output, jobs, gnuplot);
    if (verify->parsed()) {
      window.s_max = s_max;
      return run_verify(claim, window, jobs, format, output, s_max);
    }
    if (conjecture->parsed()) return run_conjecture(conj_s_max, format, output);
    if (general->parsed()) return run_general(ideal_path, format, output, jobs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
