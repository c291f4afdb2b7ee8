#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "liecontract/completeness.hpp"
#include "liecontract/contraction.hpp"
#include "liecontract/families.hpp"
#include "liecontract/lie_algebra.hpp"

namespace liecontract {

using OrderedJson = nlohmann::ordered_json;

/// An algebra file: the structure tensor plus optional family metadata.
struct AlgebraDocument {
  LieAlgebra algebra;
  std::optional<FamilySpec> family;
};

// Algebra format:
//   {"family": {"name": "g_m_q", "m": 4, "q": [4]},     (optional)
//    "dim": 9,
//    "basis": ["X1", ..., "X9"],
//    "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}, ...]}
// Indices are 1-based with i < j; coefficients are "p" or "p/q" strings.
// Brackets are emitted ordered by (i, j) and coefficient keys by k.

OrderedJson family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

OrderedJson algebra_to_json(const LieAlgebra& L, const std::optional<FamilySpec>& family = {});

/// Canonical text: two-space indentation and a trailing newline.
std::string emit_algebra(const LieAlgebra& L, const std::optional<FamilySpec>& family = {});

/// Throws std::invalid_argument on malformed input or a tensor violating
/// the Jacobi identity.
AlgebraDocument algebra_from_json(const nlohmann::json& j);
AlgebraDocument parse_algebra(std::string_view text);

OrderedJson exponents_to_json(const ExponentVector& a);

/// Entries as {"i":..,"j":..,"k":..,"c":"p/q","e":..}, 1-based.
OrderedJson parametric_law_to_json(const ParametricLaw& p);
ParametricLaw parametric_law_from_json(const nlohmann::json& j);

OrderedJson certificate_to_json(const CompletenessCertificate& cert);
OrderedJson necessary_conditions_to_json(const NecessaryConditionsReport& r);

}  // namespace liecontract
