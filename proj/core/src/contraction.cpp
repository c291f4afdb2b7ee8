#include "liecontract/contraction.hpp"

#include <stdexcept>

#include "liecontract/completeness.hpp"
#include "liecontract/errors.hpp"
#include "liecontract/families.hpp"
#include "liecontract/invariants.hpp"

namespace liecontract {

namespace {

ExponentVector evaluate(const std::vector<AffineExponent>& forms, std::int64_t n1,
                        std::int64_t n2) {
  ExponentVector out;
  out.values.reserve(forms.size());
  for (const auto& f : forms) out.values.push_back(f.evaluate(n1, n2));
  return out;
}

std::set<int> heisenberg_dropped_set(std::size_t m) {
  std::set<int> dropped;
  for (int j = 3; j <= 2 * static_cast<int>(m); ++j) dropped.insert(j);
  return dropped;
}

Verdict at_most(std::size_t lhs, std::size_t rhs) {
  if (lhs < rhs) return Verdict::kHolds;
  return lhs == rhs ? Verdict::kHoldsWithEquality : Verdict::kFails;
}

}  // namespace

std::vector<AffineExponent> symbolic_chain_exponents(std::size_t m,
                                                     const std::set<int>& dropped) {
  if (m < 2) throw std::invalid_argument("chain exponents require m ≥ 2");
  const std::size_t n = 2 * m + 1;
  auto shift = [&](std::size_t j) -> std::int64_t {
    return dropped.count(static_cast<int>(j)) ? 1 : 0;
  };
  // forms[j-1] holds a_j.
  std::vector<AffineExponent> a(n);
  a[1] = {0, 1, 0};
  a[2] = {0, 0, 1};
  a[0] = a[2] - a[1] - AffineExponent{shift(3), 0, 0};
  for (std::size_t j = 4; j <= 2 * m; ++j) {
    a[j - 1] = a[0] + a[j - 2] + AffineExponent{shift(j), 0, 0};
  }
  a[n - 1] = a[1] + a[2 * m - 2];
  return a;
}

bool pairing_equations_redundant(std::size_t m, const std::set<int>& dropped) {
  const auto a = symbolic_chain_exponents(m, dropped);
  auto at = [&](std::size_t j) { return a[j - 1]; };
  for (std::size_t j = 2; j + 1 <= m; ++j) {
    if (at(j) + at(2 * m + 1 - j) != at(j + 1) + at(2 * m - j)) return false;
  }
  return true;
}

ExponentVector solve_exponents(std::size_t m, const std::vector<int>& q, std::int64_t n1,
                               std::int64_t n2) {
  FamilySpec{Family::kGmQ, m, q}.validate();
  return evaluate(symbolic_chain_exponents(m, deleted_chain_targets(m, q)), n1, n2);
}

bool check_redundancy(std::size_t m, const std::vector<int>& q) {
  FamilySpec{Family::kGmQ, m, q}.validate();
  return pairing_equations_redundant(m, deleted_chain_targets(m, q));
}

ParametricLaw scale_law(const LieAlgebra& L, const ExponentVector& a, LimitDirection direction) {
  if (a.size() != L.dim()) throw std::invalid_argument("scale_law: exponent vector length mismatch");
  ParametricLaw p{L.dim(), L.labels(), {}};
  for (const auto& sc : L.structure_constants()) {
    std::int64_t e = a.values[sc.i] + a.values[sc.j] - a.values[sc.k];
    if (direction == LimitDirection::kToZero) e = -e;
    p.entries.push_back({sc.i, sc.j, sc.k, sc.c, e});
  }
  return p;
}

LieAlgebra limit_law(const ParametricLaw& p) {
  std::vector<StructureConstant> kept;
  for (const auto& entry : p.entries) {
    if (entry.e > 0) {
      throw DivergentLimitError("divergent entry (" + std::to_string(entry.i + 1) + "," +
                                std::to_string(entry.j + 1) + "," +
                                std::to_string(entry.k + 1) + ") with exponent e = " +
                                std::to_string(entry.e) + " > 0");
    }
    if (entry.e == 0) kept.push_back({entry.i, entry.j, entry.k, entry.c});
  }
  LieAlgebra limit(p.dim, kept, p.labels);
  if (!check_jacobi(limit).ok()) throw JacobiError("limit law violates the Jacobi identity");
  return limit;
}

HeisenbergContraction contract_to_heisenberg(std::size_t m) {
  const LieAlgebra source = make_g_m(m);
  ExponentVector a = evaluate(symbolic_chain_exponents(m, heisenberg_dropped_set(m)), 1, 1);
  LieAlgebra limit = limit_law(scale_law(source, a));
  return {std::move(a), std::move(limit)};
}

HeisenbergContraction contract_to_heisenberg(std::size_t m, const std::vector<int>& q) {
  const LieAlgebra source = q.empty() ? make_g_m(m) : make_g_m_q(m, q);
  ExponentVector a = evaluate(symbolic_chain_exponents(m, heisenberg_dropped_set(m)), 1, 1);
  LieAlgebra limit = limit_law(scale_law(source, a));
  return {std::move(a), std::move(limit)};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kHoldsWithEquality: return "holds-with-equality";
    case Verdict::kFails: return "fails";
  }
  return "unknown";
}

Verdict NecessaryConditionsReport::derivations() const { return at_most(der_mu, der_lambda); }
Verdict NecessaryConditionsReport::derived() const { return at_most(derived_lambda, derived_mu); }
Verdict NecessaryConditionsReport::center() const { return at_most(center_mu, center_lambda); }
Verdict NecessaryConditionsReport::rank() const { return at_most(rank_mu, rank_lambda); }

bool NecessaryConditionsReport::all_hold() const {
  for (Verdict v : {derivations(), derived(), center(), rank()}) {
    if (v == Verdict::kFails) return false;
  }
  return true;
}

NecessaryConditionsReport necessary_conditions(const LieAlgebra& mu, const LieAlgebra& lambda) {
  if (mu.dim() != lambda.dim()) {
    throw std::invalid_argument("necessary_conditions: dimension mismatch");
  }
  NecessaryConditionsReport r;
  r.der_mu = derivations(mu).dim();
  r.der_lambda = derivations(lambda).dim();
  r.derived_mu = derived_algebra(mu).dim();
  r.derived_lambda = derived_algebra(lambda).dim();
  r.center_mu = center(mu).dim();
  r.center_lambda = center(lambda).dim();
  r.rank_mu = diagonal_rank(mu);
  r.rank_lambda = diagonal_rank(lambda);
  return r;
}

}  // namespace liecontract
