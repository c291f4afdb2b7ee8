#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liecontract/lie_algebra.hpp"

namespace liecontract {

enum class Family {
  kGm,                     // g_m, dimension 2m+1
  kGmQ,                    // g_m(q_1, ..., q_k)
  kModelFiliform,          // L_n
  kHeisenbergPlusAbelian,  // h_{m-1} + C^2 in the adapted basis
  kAbelian,                // C^n
};

/// Canonical names: g_m, g_m_q, model_filiform, heisenberg_plus_abelian, abelian.
std::string_view family_name(Family f);
/// Accepts the canonical names and the short CLI aliases gm, gmq, filiform,
/// heisenberg. Throws std::invalid_argument.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kGm;
  std::size_t size = 0;  // m for g_m / g_m_q / heisenberg_plus_abelian, n otherwise
  std::vector<int> q;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  std::string display_name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Validates 3 <= q_1 < ... < q_k <= m+1 (k may be zero). Strict: unsorted
/// or repeated entries are rejected, not normalized.
void validate_q_list(std::size_t m, const std::vector<int>& q);

/// Chain targets j whose bracket [X_1, X_{j-1}] = X_j is removed: the set
/// {q_i, 2m+2-q_i}. 1-based.
std::set<int> deleted_chain_targets(std::size_t m, const std::vector<int>& q);

/// Structure equations of g_m(q): d(w_j) = w_1 ^ w_{j-1} for 3 <= j <= 2m
/// with j outside the deleted set, and d(w_{2m+1}) = sum_{j=2}^{m} (-1)^j
/// w_j ^ w_{2m+1-j}. An empty q gives g_m.
MaurerCartanForm g_m_structure_equations(std::size_t m, const std::vector<int>& q = {});

/// [X_1, X_j] = X_{j+1} for 2 <= j <= 2m-1 and
/// [X_j, X_{2m+1-j}] = (-1)^j X_{2m+1} for 2 <= j <= m. Requires m >= 4.
LieAlgebra make_g_m(std::size_t m);

/// g_m with the chain brackets landing in {q_i, 2m+2-q_i} removed.
/// Requires m >= 4, k >= 1 and a valid q list.
LieAlgebra make_g_m_q(std::size_t m, const std::vector<int>& q);

/// [X_1, X_j] = X_{j+1} for 2 <= j <= n-1. Requires n >= 3.
LieAlgebra make_model_filiform(std::size_t n);

/// [X_j, X_{2m+1-j}] = (-1)^j X_{2m+1} for 2 <= j <= m; X_1 and X_{2m} are
/// central. Requires m >= 2.
LieAlgebra make_heisenberg_plus_abelian(std::size_t m);

LieAlgebra make_abelian(std::size_t n);

/// Dispatches on spec.family after validation.
LieAlgebra make_family(const FamilySpec& spec);

/// All strictly increasing q lists in [3, m+1] with 1 <= k <= max_k,
/// ordered by k then lexicographically.
std::vector<std::vector<int>> enumerate_q_lists(std::size_t m, std::size_t max_k);

}  // namespace liecontract
