#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liecontract/lie_algebra.hpp"

namespace liecontract {

/// Exponents of a diagonal scaling f_t(X_i) = t^{a_i} X_i. values[i] is the
/// exponent of basis vector i (0-based), so values[0] is a_1.
struct ExponentVector {
  std::vector<std::int64_t> values;

  std::size_t size() const { return values.size(); }
  /// 1-based access matching the X_i numbering.
  std::int64_t a(std::size_t i) const { return values.at(i - 1); }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Integer affine form c0 + c1 * N1 + c2 * N2.
struct AffineExponent {
  std::int64_t constant = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;

  std::int64_t evaluate(std::int64_t N1, std::int64_t N2) const {
    return constant + n1 * N1 + n2 * N2;
  }
  friend AffineExponent operator+(AffineExponent a, const AffineExponent& b) {
    return {a.constant + b.constant, a.n1 + b.n1, a.n2 + b.n2};
  }
  friend AffineExponent operator-(AffineExponent a, const AffineExponent& b) {
    return {a.constant - b.constant, a.n1 - b.n1, a.n2 - b.n2};
  }
  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

/// Solution of the chain system for dimension 2m+1, parametrized by
/// a_2 = N1 and a_3 = N2:
///   a_1 + a_{j-1} - a_j = 0   for 3 <= j <= 2m, j not in `dropped`,
///   a_1 + a_{j-1} - a_j = -1  for j in `dropped`,
/// extended by a_{2m+1} = a_2 + a_{2m-1}. The j = 3 equation fixes a_1.
std::vector<AffineExponent> symbolic_chain_exponents(std::size_t m, const std::set<int>& dropped);

/// Whether every solution of the chain system also satisfies
/// a_j + a_{2m+1-j} = a_{j+1} + a_{2m-j} for 2 <= j <= m-1, checked
/// symbolically in (N1, N2).
bool pairing_equations_redundant(std::size_t m, const std::set<int>& dropped);

/// Exponents of the scaling that contracts g_m onto g_m(q), with
/// a_2 = N1, a_3 = N2. Throws std::invalid_argument on an invalid q list.
ExponentVector solve_exponents(std::size_t m, const std::vector<int>& q, std::int64_t n1 = 1,
                               std::int64_t n2 = 1);

/// Redundancy of the pairing equations for g_m(q). Requires a valid q list.
bool check_redundancy(std::size_t m, const std::vector<int>& q);

enum class LimitDirection {
  kToInfinity,  // limit t -> infinity: surviving entries have exponent 0
  kToZero,      // exponents negated
};

struct ParametricEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational c;
  std::int64_t e = 0;  // C^k_{ij}(t) = c * t^e

  friend bool operator==(const ParametricEntry&, const ParametricEntry&) = default;
};

/// A structure tensor whose nonzero entries are monomials c * t^e, i < j.
struct ParametricLaw {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<ParametricEntry> entries;  // ordered by (i, j, k)
};

/// Transforms L by the inverse of f_t: entry (i, j, k) picks up the exponent
/// a_i + a_j - a_k (negated for kToZero). Exponents are reported so that the
/// limit exists iff every exponent is <= 0.
ParametricLaw scale_law(const LieAlgebra& L, const ExponentVector& a,
                        LimitDirection direction = LimitDirection::kToInfinity);

/// Keeps exponent-0 entries and drops negative ones. Throws
/// DivergentLimitError naming the first entry with a positive exponent, and
/// JacobiError if the limit is not a Lie algebra.
LieAlgebra limit_law(const ParametricLaw& p);

struct HeisenbergContraction {
  ExponentVector exponents;
  LieAlgebra limit;
};

/// Exponents that kill every chain bracket [X_1, X_{j-1}] = X_j
/// (3 <= j <= 2m) while keeping the X_{2m+1} pairing terms, and the limit of
/// g_m under them (tensor-equal to h_{m-1} + C^2). Requires m >= 4.
HeisenbergContraction contract_to_heisenberg(std::size_t m);

/// Same exponents applied to g_m(q).
HeisenbergContraction contract_to_heisenberg(std::size_t m, const std::vector<int>& q);

enum class Verdict { kHolds, kHoldsWithEquality, kFails };

std::string_view verdict_name(Verdict v);

/// Dimensions of the four invariants compared by the necessary conditions
/// for mu to contract onto lambda. Verdicts are derived from the stored
/// dimensions on every call.
struct NecessaryConditionsReport {
  std::size_t der_mu = 0, der_lambda = 0;
  std::size_t derived_mu = 0, derived_lambda = 0;
  std::size_t center_mu = 0, center_lambda = 0;
  std::size_t rank_mu = 0, rank_lambda = 0;

  /// dim Der(mu) < dim Der(lambda); equal dimensions report kHoldsWithEquality.
  Verdict derivations() const;
  /// dim [lambda, lambda] <= dim [mu, mu].
  Verdict derived() const;
  /// dim Z(lambda) >= dim Z(mu).
  Verdict center() const;
  /// rank(lambda) >= rank(mu).
  Verdict rank() const;

  bool all_hold() const;
};

/// Throws std::invalid_argument when the dimensions differ.
NecessaryConditionsReport necessary_conditions(const LieAlgebra& mu, const LieAlgebra& lambda);

}  // namespace liecontract
