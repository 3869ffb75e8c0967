#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hdepth/bipartite.hpp"
#include "hdepth/report_io.hpp"
#include "hdepth/sqfree.hpp"

using namespace hdepth;

namespace {

std::vector<BigInt> alphas(const AlphaVector& av) { return av.alpha; }

}  // namespace

TEST_CASE("alpha vectors of tiny pairs", "[sqfree]") {
  const SqfreeIdealPair quotient(2, {0u}, {0b11u});
  CHECK(alphas(alpha_vector(quotient)) == std::vector<BigInt>{1, 2, 0});

  const SqfreeIdealPair ideal(2, {0b11u}, {});
  CHECK(alphas(alpha_vector(ideal)) == std::vector<BigInt>{0, 0, 1});

  const SqfreeIdealPair ring(1, {0u}, {});
  CHECK(alphas(alpha_vector(ring)) == std::vector<BigInt>{1, 1});
}

TEST_CASE("closed-form alpha for quotients", "[sqfree]") {
  CHECK(bipartite_alpha_quotient(1, 1).alpha == std::vector<BigInt>{1, 2, 0});
  CHECK(bipartite_alpha_quotient(2, 1).alpha == std::vector<BigInt>{1, 3, 1, 0});
  for (Int n = 1; n <= 9; ++n)
    for (Int m = 1; m <= n; ++m) {
      const AlphaVector closed = bipartite_alpha_quotient(n, m);
      const AlphaVector enumerated =
          alpha_vector(bipartite_edge_pair_quotient(n, m));
      REQUIRE(closed.alpha == enumerated.alpha);
      CHECK(closed.alpha[1] == n + m);
    }
}

TEST_CASE("beta tables", "[sqfree]") {
  AlphaVector k11;
  k11.alpha = {1, 2, 0};
  const BetaTable b1 = beta_table(1, k11);
  CHECK(b1.beta == std::vector<BigInt>{1, 1});
  CHECK(b1.nonnegative());
  const BetaTable b2 = beta_table(2, k11);
  CHECK(b2.beta == std::vector<BigInt>{1, 0, -1});
  CHECK_FALSE(b2.nonnegative());

  AlphaVector edge;
  edge.alpha = {0, 0, 1};
  CHECK(beta_table(2, edge).beta == std::vector<BigInt>{0, 0, 1});
  CHECK_THROWS_AS(beta_table(3, edge), std::domain_error);
  CHECK_THROWS_AS(beta_table(-1, edge), std::domain_error);
}

TEST_CASE("depth from alpha alone", "[sqfree]") {
  AlphaVector k11;
  k11.alpha = {1, 2, 0};
  CHECK(hdepth_general(k11) == 1);
  AlphaVector edge;
  edge.alpha = {0, 0, 1};
  CHECK(hdepth_general(edge) == 2);
  AlphaVector ring1;
  ring1.alpha = {1, 1};
  CHECK(hdepth_general(ring1) == 1);
  AlphaVector zero;
  zero.alpha = {0, 0, 0};
  CHECK_THROWS_AS(hdepth_general(zero), empty_quotient_error);
}

TEST_CASE("full ring in N variables has depth N", "[sqfree]") {
  for (int n = 1; n <= 12; ++n) {
    const SqfreeIdealPair ring(n, {0u}, {});
    CHECK(hdepth_general(alpha_vector(ring)) == n);
  }
}

TEST_CASE("enumeration agrees with the criterion on quotients", "[sqfree]") {
  for (Int n = 1; n <= 6; ++n)
    for (Int m = 1; m <= n && n + m <= 12; ++m) {
      const Int oracle =
          hdepth_general(alpha_vector(bipartite_edge_pair_quotient(n, m)));
      REQUIRE(oracle == quotient_hdepth_value(BipartiteCase(n, m)));
    }
}

TEST_CASE("enumeration agrees with the ideal closed form", "[sqfree]") {
  for (Int n = 1; n <= 6; ++n)
    for (Int m = 1; m <= n && n + m <= 12; ++m) {
      const Int oracle =
          hdepth_general(alpha_vector(bipartite_edge_pair_ideal(n, m)));
      REQUIRE(oracle == edge_ideal_hdepth(BipartiteCase(n, m)));
    }
}

TEST_CASE("alpha counts partition the subset lattice", "[sqfree]") {
  // |J \ I| + |I| + |complement of J| = 2^N, counting squarefree monomials.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int N = 4 + static_cast<int>(rng() % 7);  // 4..10
    std::uniform_int_distribution<VarMask> mask_dist(1, (VarMask(1) << N) - 1);
    std::vector<VarMask> gens_j, gens_i;
    for (int g = 0; g < 4; ++g) gens_j.push_back(mask_dist(rng));
    // I generators are J generators with extra variables, so containment
    // holds by construction.
    for (int g = 0; g < 2; ++g) {
      const VarMask extra = mask_dist(rng);
      gens_i.push_back(gens_j[g % gens_j.size()] | extra);
    }
    SqfreeIdealPair pair(N, gens_j, gens_i);
    BigInt in_quotient = 0, in_i = 0, outside_j = 0;
    for (VarMask t = 0; t < (VarMask(1) << N); ++t) {
      if (!pair.in_j(t))
        ++outside_j;
      else if (pair.in_i(t))
        ++in_i;
      else
        ++in_quotient;
    }
    BigInt alpha_sum = 0;
    for (const BigInt& a : alpha_vector(pair).alpha) alpha_sum += a;
    REQUIRE(alpha_sum == in_quotient);
    REQUIRE(alpha_sum + in_i + outside_j == BigInt(1) << N);
  }
}

TEST_CASE("generator minimalization", "[sqfree]") {
  // Redundant and duplicate generators collapse to the minimal set.
  const SqfreeIdealPair pair(3, {0b001u, 0b011u, 0b001u, 0b111u}, {});
  CHECK(pair.gens_j() == std::vector<VarMask>{0b001u});
  const SqfreeIdealPair ring(3, {0b010u, 0u}, {});
  CHECK(ring.gens_j() == std::vector<VarMask>{0u});
}

TEST_CASE("construction rejects bad pairs", "[sqfree]") {
  CHECK_THROWS_AS(SqfreeIdealPair(3, {0b011u}, {0b100u}), ideal_containment_error);
  CHECK_THROWS_AS(SqfreeIdealPair(2, {0b11u}, {0b11u}), empty_quotient_error);
  CHECK_THROWS_AS(SqfreeIdealPair(2, {}, {}), empty_quotient_error);
  CHECK_THROWS_AS(SqfreeIdealPair(0, {0u}, {}), ideal_format_error);
  CHECK_THROWS_AS(SqfreeIdealPair(2, {0b100u}, {}), ideal_format_error);
}

TEST_CASE("enumeration cap", "[sqfree]") {
  const SqfreeIdealPair pair(26, {0u}, {0b11u});
  CHECK_THROWS_AS(alpha_vector(pair), enum_cap_error);
  CHECK_THROWS_AS(alpha_vector(pair, 25), enum_cap_error);
  const SqfreeIdealPair small(12, {0u}, {0b11u});
  CHECK_THROWS_AS(alpha_vector(small, 10), enum_cap_error);
  CHECK_NOTHROW(alpha_vector(small, 12));
}

TEST_CASE("parallel enumeration is deterministic", "[sqfree]") {
  const SqfreeIdealPair pair = bipartite_edge_pair_quotient(6, 5);
  const AlphaVector serial = alpha_vector(pair, kDefaultEnumCap, 1);
  const AlphaVector parallel = alpha_vector(pair, kDefaultEnumCap, 4);
  const AlphaVector parallel7 = alpha_vector(pair, kDefaultEnumCap, 7);
  CHECK(serial.alpha == parallel.alpha);
  CHECK(serial.alpha == parallel7.alpha);
}

TEST_CASE("JSON loading", "[sqfree]") {
  const auto quotient = load_ideal_pair(nlohmann::json::parse(
      R"({"num_vars": 2, "gens_J": "ring", "gens_I": [[0, 1]]})"));
  CHECK(alpha_vector(quotient).alpha == std::vector<BigInt>{1, 2, 0});

  const auto ideal = load_ideal_pair(nlohmann::json::parse(
      R"({"num_vars": 2, "gens_J": [[0, 1]], "gens_I": "zero"})"));
  CHECK(alpha_vector(ideal).alpha == std::vector<BigInt>{0, 0, 1});

  CHECK_THROWS_AS(load_ideal_pair(nlohmann::json::parse("[]")),
                  ideal_format_error);
  CHECK_THROWS_AS(load_ideal_pair(nlohmann::json::parse(
                      R"({"num_vars": 2, "gens_J": "ring"})")),
                  ideal_format_error);
  CHECK_THROWS_AS(load_ideal_pair(nlohmann::json::parse(
                      R"({"num_vars": 2, "gens_J": "everything", "gens_I": "zero"})")),
                  ideal_format_error);
  CHECK_THROWS_AS(load_ideal_pair(nlohmann::json::parse(
                      R"({"num_vars": 2, "gens_J": [[0, 2]], "gens_I": "zero"})")),
                  ideal_format_error);
  CHECK_THROWS_AS(load_ideal_pair(nlohmann::json::parse(
                      R"({"num_vars": 2, "gens_J": [[0, 0]], "gens_I": "zero"})")),
                  ideal_format_error);
  CHECK_THROWS_AS(load_ideal_pair(nlohmann::json::parse(
                      R"({"num_vars": 2, "gens_J": [[0.5]], "gens_I": "zero"})")),
                  ideal_format_error);
  CHECK_THROWS_AS(load_ideal_pair_file("/nonexistent/pair.json"),
                  ideal_format_error);
}

TEST_CASE("depth report for a generic pair", "[sqfree]") {
  const SqfreeIdealPair quotient(2, {0u}, {0b11u});
  const GeneralReport r = make_general_report(quotient);
  CHECK(r.h == 1);
  CHECK(r.beta_at_h.beta == std::vector<BigInt>{1, 1});
  REQUIRE(r.has_failure);
  CHECK(r.failure_q == 2);
  CHECK(r.failure_k == 2);
  CHECK(r.failure_beta == -1);

  const SqfreeIdealPair ring(1, {0u}, {});
  const GeneralReport full = make_general_report(ring);
  CHECK(full.h == 1);
  CHECK_FALSE(full.has_failure);
}
