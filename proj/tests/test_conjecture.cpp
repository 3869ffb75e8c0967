#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hdepth/conjecture.hpp"

using hdepth::BigRat;
using hdepth::ConjectureVariant;
using hdepth::Int;
using hdepth::conjecture_product;
using hdepth::conjecture_threshold;
using hdepth::product_spec;

TEST_CASE("product index ranges", "[conjecture]") {
  const auto a = product_spec(ConjectureVariant::a, 3);
  CHECK(a.j_first == 1);
  CHECK(a.j_last == 6);
  CHECK(a.shift == 7);
  const auto b = product_spec(ConjectureVariant::b, 3);
  CHECK(b.j_first == 1);
  CHECK(b.j_last == 7);
  CHECK(b.shift == 8);
  const auto c = product_spec(ConjectureVariant::c, 3);
  CHECK(c.j_first == 0);
  CHECK(c.j_last == 5);
  CHECK(c.shift == 6);
  const auto d = product_spec(ConjectureVariant::d, 3);
  CHECK(d.j_first == 2);
  CHECK(d.j_last == 7);
  CHECK(d.shift == 8);
  CHECK_THROWS_AS(product_spec(ConjectureVariant::a, 0), std::domain_error);
}

TEST_CASE("pinned products", "[conjecture]") {
  CHECK(conjecture_product(ConjectureVariant::a, 1, 10) == BigRat(11, 6));
  CHECK(conjecture_product(ConjectureVariant::c, 1, 6) == BigRat(28, 15));
  CHECK(conjecture_product(ConjectureVariant::b, 1, 18) == BigRat(133, 68));
  CHECK(conjecture_product(ConjectureVariant::d, 1, 13) == BigRat(21, 11));
}

TEST_CASE("pinned thresholds", "[conjecture]") {
  const auto ta = conjecture_threshold(ConjectureVariant::a, 1);
  CHECK(ta.value == 10);
  CHECK(ta.certified);
  CHECK(conjecture_threshold(ConjectureVariant::b, 1).value == 18);
  CHECK(conjecture_threshold(ConjectureVariant::c, 1).value == 6);
  CHECK(conjecture_threshold(ConjectureVariant::d, 1).value == 13);
}

TEST_CASE("k inside or below the index range is rejected", "[conjecture]") {
  CHECK_THROWS_AS(conjecture_product(ConjectureVariant::a, 1, 2), std::domain_error);
  CHECK_THROWS_AS(conjecture_product(ConjectureVariant::a, 1, 1), std::domain_error);
  CHECK_THROWS_AS(conjecture_product(ConjectureVariant::d, 2, 5), std::domain_error);
  CHECK_NOTHROW(conjecture_product(ConjectureVariant::a, 1, 3));
}

TEST_CASE("products strictly decrease in k", "[conjecture]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> s_dist(1, 12);
  for (const ConjectureVariant v :
       {ConjectureVariant::a, ConjectureVariant::b, ConjectureVariant::c,
        ConjectureVariant::d}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Int s = s_dist(rng);
      const Int threshold = conjecture_threshold(v, s).value;
      std::uniform_int_distribution<Int> k_dist(threshold, threshold + 50);
      const Int k = k_dist(rng);
      CHECK(conjecture_product(v, s, k + 1) < conjecture_product(v, s, k));
    }
  }
}

TEST_CASE("every factor exceeds 1, so products exceed 1", "[conjecture]") {
  for (const ConjectureVariant v :
       {ConjectureVariant::a, ConjectureVariant::b, ConjectureVariant::c,
        ConjectureVariant::d}) {
    for (Int s = 1; s <= 6; ++s) {
      const Int threshold = conjecture_threshold(v, s).value;
      CHECK(conjecture_product(v, s, threshold) > 1);
    }
  }
}
