#pragma once

// Generic squarefree oracle: hdepth of J/I for an arbitrary pair of
// squarefree monomial ideals 0 <= I < J, computed from first principles.
//
// Squarefree monomials are variable subsets, encoded as bit masks.  The
// alpha vector counts monomials of J \ I by degree via full subset
// enumeration (hence the variable cap); the beta transform and an
// exhaustive q scan then give the depth.  Deliberately simple and
// independent of the bipartite criterion so the two can cross-check.

#include <bit>
#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hdepth/binomial.hpp"
#include "hdepth/integer.hpp"
#include "hdepth/parallel.hpp"

namespace hdepth {

inline constexpr int kDefaultEnumCap = 24;
inline constexpr int kMaxEnumVars = 30;

struct ideal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ideal_format_error : ideal_error {
  using ideal_error::ideal_error;
};
struct ideal_containment_error : ideal_error {
  using ideal_error::ideal_error;
};
struct empty_quotient_error : ideal_error {
  using ideal_error::ideal_error;
};
struct enum_cap_error : ideal_error {
  using ideal_error::ideal_error;
};

using VarMask = std::uint32_t;

/// A pair of squarefree monomial ideals I <= J in num_vars variables.
/// Generators are stored minimalized.  An empty generator list is the zero
/// ideal; a generator with empty support is the unit (whole ring).
/// Construction rejects pairs without containment and pairs whose
/// squarefree quotient J \ I is empty.
class SqfreeIdealPair {
 public:
  SqfreeIdealPair(int num_vars, std::vector<VarMask> gens_j,
                  std::vector<VarMask> gens_i)
      : num_vars_(num_vars),
        gens_j_(minimalize(std::move(gens_j), num_vars)),
        gens_i_(minimalize(std::move(gens_i), num_vars)) {
    if (num_vars_ < 1 || num_vars_ > kMaxEnumVars)
      throw ideal_format_error("num_vars must be between 1 and " +
                               std::to_string(kMaxEnumVars));
    for (VarMask g : gens_i_)
      if (!divides_some(gens_j_, g))
        throw ideal_containment_error(
            "generator of I lies outside J: containment I <= J violated");
    bool equal = true;
    for (VarMask g : gens_j_)
      if (!divides_some(gens_i_, g)) {
        equal = false;
        break;
      }
    if (equal)
      throw empty_quotient_error(
          "I and J agree on all squarefree monomials: quotient is empty");
  }

  int num_vars() const { return num_vars_; }
  const std::vector<VarMask>& gens_j() const { return gens_j_; }
  const std::vector<VarMask>& gens_i() const { return gens_i_; }

  bool in_j(VarMask monomial) const { return divides_some(gens_j_, monomial); }
  bool in_i(VarMask monomial) const { return divides_some(gens_i_, monomial); }

 private:
  static bool divides_some(const std::vector<VarMask>& gens, VarMask monomial) {
    for (VarMask g : gens)
      if ((monomial & g) == g) return true;
    return false;
  }

  static std::vector<VarMask> minimalize(std::vector<VarMask> gens, int num_vars) {
    if (num_vars >= 1 && num_vars <= kMaxEnumVars) {
      const VarMask all = (num_vars == kMaxEnumVars)
                              ? VarMask((1u << kMaxEnumVars) - 1)
                              : VarMask((1u << num_vars) - 1);
      for (VarMask g : gens)
        if ((g & ~all) != 0)
          throw ideal_format_error("generator uses a variable index >= num_vars");
    }
    std::vector<VarMask> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (i == j) continue;
        const bool j_divides_i = (gens[i] & gens[j]) == gens[j];
        if (j_divides_i && (gens[j] != gens[i] || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(gens[i]);
    }
    return minimal;
  }

  int num_vars_;
  std::vector<VarMask> gens_j_;
  std::vector<VarMask> gens_i_;
};

/// alpha[j] = number of squarefree monomials of degree j lying in J but
/// not in I, computed by enumerating all 2^num_vars subsets.
struct AlphaVector {
  std::vector<BigInt> alpha;  // size num_vars + 1
  Int num_vars() const { return static_cast<Int>(alpha.size()) - 1; }
  bool all_zero() const {
    for (const BigInt& a : alpha)
      if (a != 0) return false;
    return true;
  }
};

inline AlphaVector alpha_vector(const SqfreeIdealPair& pair,
                                int cap = kDefaultEnumCap, int jobs = 1) {
  const int N = pair.num_vars();
  if (N > cap)
    throw enum_cap_error("enumeration over " + std::to_string(N) +
                         " variables exceeds the cap of " + std::to_string(cap));
  const std::uint64_t total = std::uint64_t(1) << N;
  if (jobs < 1) jobs = 1;
  const int chunks = jobs;
  std::vector<std::vector<std::int64_t>> partial(
      chunks, std::vector<std::int64_t>(N + 1, 0));
  parallel_for_index(chunks, jobs, [&](std::uint64_t w) {
    const std::uint64_t lo = total * w / chunks;
    const std::uint64_t hi = total * (w + 1) / chunks;
    auto& counts = partial[w];
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      const VarMask monomial = static_cast<VarMask>(bits);
      if (pair.in_j(monomial) && !pair.in_i(monomial))
        ++counts[std::popcount(monomial)];
    }
  });
  AlphaVector result;
  result.alpha.assign(N + 1, BigInt(0));
  for (const auto& counts : partial)
    for (int d = 0; d <= N; ++d) result.alpha[d] += counts[d];
  return result;
}

/// Closed-form alpha vector of S/I for the bipartite edge ideal on blocks
/// of size n and m: alpha[0] = 1 and alpha[j] = C(n,j) + C(m,j) for j >= 1.
inline AlphaVector bipartite_alpha_quotient(Int n, Int m) {
  if (n < 1 || m < 1)
    throw std::domain_error("bipartite_alpha_quotient: block sizes must be >= 1");
  AlphaVector result;
  result.alpha.reserve(n + m + 1);
  result.alpha.push_back(1);
  for (Int j = 1; j <= n + m; ++j)
    result.alpha.push_back(binomial(n, j) + binomial(m, j));
  return result;
}

/// beta[k] = sum_{j=0}^{k} (-1)^(k-j) C(q-j, k-j) alpha[j] for 0 <= k <= q.
struct BetaTable {
  Int q = 0;
  std::vector<BigInt> beta;
  bool nonnegative() const {
    for (const BigInt& b : beta)
      if (b < 0) return false;
    return true;
  }
};

inline BetaTable beta_table(Int q, const AlphaVector& av) {
  if (q < 0 || q > av.num_vars())
    throw std::domain_error("beta_table: q out of range");
  BetaTable table;
  table.q = q;
  table.beta.reserve(q + 1);
  for (Int k = 0; k <= q; ++k) {
    BigInt b = 0;
    for (Int j = 0; j <= k; ++j) {
      const BigInt term = binomial(q - j, k - j) * av.alpha[j];
      if ((k - j) % 2 == 0)
        b += term;
      else
        b -= term;
    }
    table.beta.push_back(std::move(b));
  }
  return table;
}

/// hdepth from the alpha vector alone: the largest q in [0, num_vars]
/// whose beta table is componentwise nonnegative.  Exhaustive over q by
/// design; this is the slow, trustworthy oracle.
inline Int hdepth_general(const AlphaVector& av) {
  if (av.all_zero())
    throw empty_quotient_error("hdepth_general: alpha vector is identically zero");
  Int best = 0;
  for (Int q = 0; q <= av.num_vars(); ++q)
    if (beta_table(q, av).nonnegative()) best = q;
  return best;
}

/// Build the edge-ideal pair of the complete bipartite graph on blocks of
/// size n and m: variables 0..n-1 and n..n+m-1, generators x_i y_j.
inline SqfreeIdealPair bipartite_edge_pair_quotient(Int n, Int m) {
  std::vector<VarMask> gens;
  gens.reserve(n * m);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < m; ++j)
      gens.push_back((VarMask(1) << i) | (VarMask(1) << (n + j)));
  // J = whole ring, I = edge ideal: alpha counts squarefree monomials
  // outside the edge ideal.
  return SqfreeIdealPair(static_cast<int>(n + m), {VarMask(0)}, std::move(gens));
}

inline SqfreeIdealPair bipartite_edge_pair_ideal(Int n, Int m) {
  std::vector<VarMask> gens;
  gens.reserve(n * m);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < m; ++j)
      gens.push_back((VarMask(1) << i) | (VarMask(1) << (n + j)));
  // J = edge ideal, I = zero ideal.
  return SqfreeIdealPair(static_cast<int>(n + m), std::move(gens), {});
}

/// JSON ideal-pair format:
///   {"num_vars": N, "gens_J": [[indices], ...] | "ring",
///                   "gens_I": [[indices], ...] | "zero"}
inline SqfreeIdealPair load_ideal_pair(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ideal_format_error("ideal pair must be a JSON object");
  if (!doc.contains("num_vars") || !doc["num_vars"].is_number_integer())
    throw ideal_format_error("missing or non-integer num_vars");
  const Int num_vars = doc["num_vars"].get<Int>();
  if (num_vars < 1 || num_vars > kMaxEnumVars)
    throw ideal_format_error("num_vars must be between 1 and " +
                             std::to_string(kMaxEnumVars));
  auto parse_gens = [&](const char* key, const char* unit_token) {
    std::vector<VarMask> gens;
    if (!doc.contains(key))
      throw ideal_format_error(std::string("missing ") + key);
    const nlohmann::json& node = doc[key];
    if (node.is_string()) {
      if (node.get<std::string>() == unit_token) {
        if (std::string(unit_token) == "ring") gens.push_back(0);
        return gens;  // "zero" -> empty generator list
      }
      throw ideal_format_error(std::string(key) + ": unknown token \"" +
                               node.get<std::string>() + "\"");
    }
    if (!node.is_array())
      throw ideal_format_error(std::string(key) +
                               " must be an array of generators or a token");
    for (const nlohmann::json& gen : node) {
      if (!gen.is_array())
        throw ideal_format_error(std::string(key) +
                                 ": each generator must be an array of indices");
      VarMask mask = 0;
      for (const nlohmann::json& idx : gen) {
        if (!idx.is_number_integer())
          throw ideal_format_error(std::string(key) +
                                   ": variable indices must be integers");
        const Int v = idx.get<Int>();
        if (v < 0 || v >= num_vars)
          throw ideal_format_error(std::string(key) + ": variable index " +
                                   std::to_string(v) + " out of range");
        const VarMask bit = VarMask(1) << v;
        if (mask & bit)
          throw ideal_format_error(std::string(key) +
                                   ": repeated variable in a squarefree generator");
        mask |= bit;
      }
      gens.push_back(mask);
    }
    return gens;
  };
  std::vector<VarMask> gens_j = parse_gens("gens_J", "ring");
  std::vector<VarMask> gens_i = parse_gens("gens_I", "zero");
  return SqfreeIdealPair(static_cast<int>(num_vars), std::move(gens_j),
                         std::move(gens_i));
}

inline SqfreeIdealPair load_ideal_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ideal_format_error("cannot open ideal file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ideal_format_error("invalid JSON in " + path + ": " + e.what());
  }
  return load_ideal_pair(doc);
}

}  // namespace hdepth
