#include <catch2/catch_amalgamated.hpp>

#include "hdepth/bipartite.hpp"

using namespace hdepth;

TEST_CASE("block sizes normalize and validate", "[bipartite]") {
  const BipartiteCase c(2, 5);
  CHECK(c.n() == 5);
  CHECK(c.m() == 2);
  CHECK(c.total_vars() == 7);
  CHECK_THROWS_AS(BipartiteCase(0, 3), std::domain_error);
  CHECK_THROWS_AS(BipartiteCase(3, -1), std::domain_error);
}

TEST_CASE("criterion probes", "[bipartite]") {
  CHECK(criterion_holds({3, 1}, 2).passes());
  const CriterionProbe probe = criterion_holds({3, 1}, 3);
  REQUIRE_FALSE(probe.passes());
  REQUIRE(probe.failures.size() == 1);
  CHECK(probe.failures[0].ell == 1);
  CHECK(probe.failures[0].lhs_n == 0);
  CHECK(probe.failures[0].lhs_m == 1);
  CHECK(probe.failures[0].rhs == 3);
  CHECK(criterion_holds({5, 2}, 1).passes());  // vacuous: no valid order
  CHECK(criterion_holds({5, 2}, 0).passes());
  CHECK_THROWS_AS(criterion_holds({5, 2}, 8), std::domain_error);
  CHECK_THROWS_AS(criterion_holds({5, 2}, -1), std::domain_error);
}

TEST_CASE("depth pinned values", "[bipartite]") {
  CHECK(quotient_hdepth_value({1, 1}) == 1);
  CHECK(quotient_hdepth_value({2, 1}) == 1);
  CHECK(quotient_hdepth_value({2, 2}) == 1);
  CHECK(quotient_hdepth_value({3, 1}) == 2);
  CHECK(quotient_hdepth_value({4, 2}) == 2);
  CHECK(quotient_hdepth_value({5, 3}) == 3);
  CHECK(quotient_hdepth_value({10, 5}) == 5);
  CHECK(quotient_hdepth_value({100, 50}) == 50);
}

TEST_CASE("descending scan equals exhaustive maximum", "[bipartite]") {
  for (Int n = 1; n <= 25; ++n)
    for (Int m = 1; m <= n; ++m) {
      const BipartiteCase c(n, m);
      Int best = 0;
      for (Int q = 0; q <= c.total_vars(); ++q)
        if (criterion_holds(c, q).passes()) best = q;
      REQUIRE(quotient_hdepth_value(c) == best);
    }
}

TEST_CASE("ideal depth closed form", "[bipartite]") {
  CHECK(edge_ideal_hdepth({1, 1}) == 2);
  CHECK(edge_ideal_hdepth({3, 1}) == 3);
  CHECK(edge_ideal_hdepth({2, 2}) == 3);
  CHECK(edge_ideal_hdepth({10, 7}) == 9);
}

TEST_CASE("plateau probe", "[bipartite]") {
  CHECK(central_plateau_value({10, 5}) == 5);
  CHECK(central_plateau_value({4, 2}) == 2);
  CHECK(central_plateau_value({2, 2}) == 1);
  CHECK(central_plateau_value({3, 1}) == 2);
  CHECK_FALSE(central_plateau_value({10, 1}).has_value());
  CHECK_FALSE(central_plateau_value({10, 10}).has_value());
  const PlateauProbe p = central_plateau({10, 5});
  CHECK(p.s == 5);
  CHECK(p.t == 0);
  CHECK(p.predicate_value == -10);
}

TEST_CASE("plateau value equals the computed depth when it applies", "[bipartite]") {
  for (Int n = 1; n <= 60; ++n)
    for (Int m = 1; m <= n; ++m) {
      const BipartiteCase c(n, m);
      const auto plateau = central_plateau_value(c);
      if (plateau) REQUIRE(quotient_hdepth_value(c) == *plateau);
    }
}

TEST_CASE("half-block cases sit on the plateau", "[bipartite]") {
  for (Int n = 2; n <= 40; ++n) {
    CHECK(quotient_hdepth_value({n, n / 2}) == ceil_half(n));
    CHECK(quotient_hdepth_value({n, ceil_half(n)}) == ceil_half(n));
  }
}

TEST_CASE("bounds bracket the depth", "[bipartite]") {
  for (Int n = 1; n <= 40; ++n)
    for (Int m = 1; m <= n; ++m) {
      const BipartiteCase c(n, m);
      const Int h = quotient_hdepth_value(c);
      REQUIRE(half_lower_bound(c) <= h);
      REQUIRE(h <= sqrt_upper_bound(c));
    }
}

TEST_CASE("diagonal sandwich pinned values", "[bipartite]") {
  const DiagonalBounds b100 = diagonal_bounds(100);
  CHECK(b100.lo == 54);
  CHECK(b100.hi == 56);
  CHECK(b100.certified);
  const DiagonalBounds b2 = diagonal_bounds(2);
  CHECK(b2.lo == 0);
  CHECK(b2.hi == 2);
  const DiagonalBounds b4 = diagonal_bounds(4);
  CHECK(b4.lo == 2);
  CHECK(b4.hi == 3);
  CHECK_THROWS_AS(diagonal_bounds(1), std::domain_error);
}

TEST_CASE("conjectured diagonal bound pinned values", "[bipartite]") {
  CHECK(diagonal_conjectured_bound(100).value == 55);
  CHECK(diagonal_conjectured_bound(2).value == 1);
  for (Int n = 2; n <= 300; ++n) {
    const GuardedFloorResult pop = diagonal_conjectured_bound(n);
    REQUIRE(pop.certified);
    REQUIRE(pop.value >= diagonal_bounds(n).lo);
  }
}

TEST_CASE("star lower bound pinned values", "[bipartite]") {
  CHECK(star_lower_bound(1) == 0);
  CHECK(star_lower_bound(4) == 2);
  CHECK(star_lower_bound(100) == 58);
  CHECK_THROWS_AS(star_lower_bound(0), std::domain_error);
}

TEST_CASE("regime classification", "[bipartite]") {
  const RegimeBounds narrow = regime_classification({2, 2});
  CHECK(narrow.narrow);
  CHECK_FALSE(narrow.h_min.has_value());
  CHECK(narrow.h_max == 1);
  const RegimeBounds wide = regime_classification({3, 1});
  CHECK_FALSE(wide.narrow);
  CHECK(wide.h_min == 1);
  CHECK(wide.h_max == 3);
  const RegimeBounds tight = regime_classification({5, 3});
  CHECK_FALSE(tight.narrow);
  CHECK(tight.h_min == 3);
  CHECK(tight.h_max == 3);
}

TEST_CASE("full report wiring", "[bipartite]") {
  const HdepthReport r = quotient_hdepth({3, 1});
  CHECK(r.h == 2);
  CHECK(r.lower_half == 2);
  CHECK(r.upper_sqrt == 2);
  CHECK(r.ideal_hdepth == 3);
  CHECK(r.plateau.applies());
  CHECK(r.plateau.value == 2);
  CHECK_FALSE(r.diagonal.has_value());
  CHECK(r.witness_at_h.passes());
  REQUIRE(r.witness_above.has_value());
  CHECK(r.witness_above->q == 3);
  CHECK_FALSE(r.witness_above->passes());

  const HdepthReport d = quotient_hdepth({4, 4});
  REQUIRE(d.diagonal.has_value());
  CHECK(d.diagonal->lo <= d.h);
  CHECK(d.h <= d.diagonal->hi);
}
