#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liecontract/matrix.hpp"
#include "liecontract/rational.hpp"
#include "liecontract/subspace.hpp"

namespace liecontract {

// Basis indices are 0-based throughout the library. Text and JSON
// surfaces print them 1-based (X1, X2, ...).

/// One structure constant: [e_i, e_j] has coefficient c on e_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational c;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

struct BracketTerm {
  std::size_t k = 0;
  Rational c;

  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// A finite-dimensional Lie algebra given by its structure constants on a
/// fixed basis. Only pairs i < j are stored; antisymmetry is structural.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Constants with i > j are stored as (j, i, k, -c); repeated entries
  /// accumulate and zero results are dropped. Throws std::invalid_argument
  /// on out-of-range indices or a nonzero [e_i, e_i]. Labels default to
  /// X1..Xn. Jacobi is not checked here (see check_jacobi).
  explicit LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants = {},
                      std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Nonzero terms of [e_i, e_j] for i < j, sorted by k.
  std::span<const BracketTerm> terms(std::size_t i, std::size_t j) const;

  /// C^k_{ij} for any i, j.
  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  /// [e_i, e_j] as a dense vector.
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  /// All nonzero constants with i < j, ordered by (i, j, k).
  std::vector<StructureConstant> structure_constants() const;

  /// Number of pairs i < j with [e_i, e_j] != 0.
  std::size_t nonzero_pairs() const;

  bool is_abelian() const { return nonzero_pairs() == 0; }

  LieAlgebra relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * dim_ + j; }

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<BracketTerm>> pairs_;  // indexed by i * dim + j, i < j
};

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "X");

/// Equality of dimension and structure constants, ignoring labels.
bool tensor_equal(const LieAlgebra& a, const LieAlgebra& b);

/// sum_{i,j} x_i y_j C^k_{ij} e_k. Throws std::invalid_argument on length mismatch.
Vector bracket(const LieAlgebra& L, std::span<const Rational> x, std::span<const Rational> y);

/// Matrix of ad(x); column c holds [x, e_c].
Matrix ad(const LieAlgebra& L, std::span<const Rational> x);

/// [A, B] = span{[a, b]}.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

struct JacobiViolation {
  std::size_t i, j, k, s;
  Rational residual;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] for all
/// i < j < k and reports every nonzero component s.
JacobiReport check_jacobi(const LieAlgebra& L);

struct MaurerCartanTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational c;
};

/// Structure equations d(omega_k) = sum c * omega_i ^ omega_j.
struct MaurerCartanForm {
  std::size_t dim = 0;
  std::vector<std::vector<MaurerCartanTerm>> two_forms;  // indexed by k; may be shorter than dim
  std::vector<std::string> labels;
};

/// Dualizes structure equations: a term c * omega_i ^ omega_j in d(omega_k)
/// gives [X_i, X_j] = c X_k. Throws JacobiError if the result is not a Lie
/// algebra and std::invalid_argument on malformed terms.
LieAlgebra from_maurer_cartan(const MaurerCartanForm& form);

std::string format_bracket_table(const LieAlgebra& L);

}  // namespace liecontract
