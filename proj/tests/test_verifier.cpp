#include <catch2/catch_amalgamated.hpp>

#include "hdepth/report_io.hpp"
#include "hdepth/verifier.hpp"

using namespace hdepth;

namespace {

VerifyWindow small_window(Int n_max) {
  VerifyWindow w;
  w.n_max = n_max;
  w.nm_cap = 12;
  w.trend_n = {50, 100};
  return w;
}

}  // namespace

TEST_CASE("claim id round trip", "[verifier]") {
  for (const TheoremId id : all_theorem_ids()) {
    const auto back = theorem_id_from_name(theorem_id_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(theorem_id_from_name("thm99").has_value());
}

TEST_CASE("every claim passes on a small window", "[verifier]") {
  for (const TheoremId id : all_theorem_ids()) {
    const TheoremCheckReport r = verify(id, small_window(30), 2);
    INFO("claim " << theorem_id_name(id));
    CHECK(r.passed());
    CHECK(r.complete);
    CHECK(r.cases_checked > 0);
  }
}

TEST_CASE("case counts match the window", "[verifier]") {
  CHECK(verify(TheoremId::cor24, small_window(30)).cases_checked == 465);
  CHECK(verify(TheoremId::thm33_3, small_window(30)).cases_checked == 30);
  CHECK(verify(TheoremId::cipu_m1, small_window(25)).cases_checked == 25);
  VerifyWindow w = small_window(10);
  w.nm_cap = 6;
  // pairs with n >= m >= 1, n + m <= 6: (1,1),(2,1),(2,2),(3,1),(3,2),(4,1),(3,3),(4,2),(5,1)
  CHECK(verify(TheoremId::thm21, w).cases_checked == 9);
}

TEST_CASE("conditional flag is set only for the conjectured bound", "[verifier]") {
  CHECK(verify(TheoremId::pop42_conditional, small_window(20)).conditional);
  CHECK_FALSE(verify(TheoremId::thm32, small_window(20)).conditional);
}

TEST_CASE("case budget truncates and flags incomplete", "[verifier]") {
  VerifyWindow w = small_window(30);
  w.max_cases = 10;
  const TheoremCheckReport r = verify(TheoremId::cor24, w);
  CHECK_FALSE(r.complete);
  CHECK(r.cases_checked == 10);  // rows 1..4 hold 10 pairs
  CHECK(r.passed());
}

TEST_CASE("conjecture certificates at desk scale", "[verifier]") {
  const auto cases = conjecture_certify_all(8);
  REQUIRE(cases.size() == 32);
  for (const ConjectureCase& c : cases) {
    INFO("variant " << conjecture_variant_char(c.variant) << " s=" << c.s);
    CHECK(c.threshold_certified);
    CHECK(c.holds);
    CHECK(c.monotone_confirmed);
  }
  const auto a = conjecture_certify(ConjectureVariant::a, 1);
  REQUIRE(a.size() == 1);
  CHECK(a[0].k_threshold == 10);
  CHECK(a[0].product == BigRat(11, 6));
}

TEST_CASE("trend ratios", "[verifier]") {
  const auto rows = trend_ratios({100}, MRule::half);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].m == 50);
  CHECK(rows[0].h == 50);
  CHECK(rows[0].ratio == BigRat(1, 2));
  const auto ones = trend_ratios({20, 40}, MRule::one);
  CHECK(ones[0].n == 20);
  CHECK(ones[1].n == 40);
  CHECK(ones[0].ratio >= BigRat(1, 2));
  const auto custom = trend_ratios({10, 12}, MRule::custom, {3, 5});
  CHECK(custom[0].m == 3);
  CHECK(custom[1].m == 5);
  CHECK_THROWS_AS(trend_ratios({10}, MRule::custom, {1, 2}), std::domain_error);
}

TEST_CASE("JSON reports are byte-deterministic across jobs and runs", "[verifier]") {
  const VerifyWindow w = small_window(20);
  const std::string first =
      theorem_report_json(verify(TheoremId::thm33_3, w, 1)).dump();
  const std::string second =
      theorem_report_json(verify(TheoremId::thm33_3, w, 1)).dump();
  const std::string parallel =
      theorem_report_json(verify(TheoremId::thm33_3, w, 4)).dump();
  CHECK(first == second);
  CHECK(first == parallel);
  const std::string pop1 =
      theorem_report_json(verify(TheoremId::pop42_conditional, w, 1)).dump();
  const std::string pop4 =
      theorem_report_json(verify(TheoremId::pop42_conditional, w, 4)).dump();
  CHECK(pop1 == pop4);
}

TEST_CASE("JSON reports carry no volatile fields", "[verifier]") {
  const OrderedJson obj =
      theorem_report_json(verify(TheoremId::thm33_3, small_window(10)));
  CHECK_FALSE(obj.contains("runtime"));
  CHECK_FALSE(obj.contains("runtime_seconds"));
  CHECK_FALSE(obj.contains("timestamp"));
  CHECK(obj.contains("check"));
  CHECK(obj.contains("window"));
  CHECK(obj.contains("violations"));
  // round trip: parse(dump) -> dump is the identity
  const std::string dumped = obj.dump();
  CHECK(OrderedJson::parse(dumped).dump() == dumped);
}

TEST_CASE("text report carries the runtime", "[verifier]") {
  const std::string text =
      theorem_report_text(verify(TheoremId::thm33_3, small_window(10)));
  CHECK(text.find("runtime:") != std::string::npos);
  CHECK(text.find("violations:    0") != std::string::npos);
}

TEST_CASE("trend check reports ratios and widths", "[verifier]") {
  const TheoremCheckReport r = verify(TheoremId::clim_trend, small_window(20), 2);
  CHECK(r.passed());
  CHECK(r.cases_checked == 3 + 2 * 1);
  bool saw_ratio_note = false, saw_width_note = false;
  for (const std::string& note : r.notes) {
    if (note.find("ratios:") != std::string::npos) saw_ratio_note = true;
    if (note.find("widths:") != std::string::npos) saw_width_note = true;
  }
  CHECK(saw_ratio_note);
  CHECK(saw_width_note);
}

TEST_CASE("conjectured-bound check reports its certificates", "[verifier]") {
  const TheoremCheckReport r =
      verify(TheoremId::pop42_conditional, small_window(60));
  CHECK(r.passed());
  CHECK(r.complete);
  bool saw_certificate = false;
  for (const std::string& note : r.notes)
    if (note.find("certificate variant") != std::string::npos)
      saw_certificate = true;
  CHECK(saw_certificate);
}
