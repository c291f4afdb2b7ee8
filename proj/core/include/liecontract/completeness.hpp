#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "liecontract/lie_algebra.hpp"

namespace liecontract {

/// Diagonal weight system of an algebra in its given basis: one equation
/// alpha_i + alpha_j = alpha_k for every nonzero C^k_{ij}. Its solutions are
/// exactly the diagonal derivations.
struct WeightSystem {
  std::size_t source_dim = 0;
  std::vector<std::array<std::size_t, 3>> equations;  // (i, j, k), ordered by (i, j, k)
  std::vector<Vector> solution_basis;                  // canonical echelon basis
  std::size_t rank = 0;                                // = solution_basis.size()
};

WeightSystem weight_system(const LieAlgebra& L);

/// Dimension of the space of diagonal derivations in the given basis. For
/// basis-adapted nilpotent algebras this is the rank (dimension of a
/// maximal torus).
std::size_t diagonal_rank(const LieAlgebra& L);

/// A torus of diagonal derivations; generator a acts by X_i -> weights[a][i] X_i.
struct Torus {
  std::vector<Vector> generators;

  std::size_t dim() const { return generators.size(); }
};

/// One diagonal derivation per weight-system basis vector. Each generator is
/// re-verified against the derivation equation; a failure throws
/// std::logic_error.
Torus max_torus(const LieAlgebra& L);

/// t + L with [h_a, h_b] = 0 and [h_a, X_i] = weights[a][i] X_i. The torus
/// elements follow the basis of L and are labelled H1, H2, ... Throws
/// std::invalid_argument if a generator is not a derivation.
LieAlgebra semidirect_product(const LieAlgebra& L, const Torus& t);

struct WeightMultiplicity {
  Vector weight;  // value on each torus generator
  std::size_t dim = 0;

  friend bool operator==(const WeightMultiplicity&, const WeightMultiplicity&) = default;
};

struct CompletenessCertificate {
  std::size_t algebra_dim = 0;
  std::size_t center_dim = 0;
  std::size_t der_dim = 0;
  std::size_t torus_dim = 0;
  std::vector<WeightMultiplicity> weight_multiplicities;  // weights of the nilpotent part
  bool solvable = false;

  /// Centerless and every derivation inner: with trivial center ad is
  /// injective, so dim Der = dim L forces Der = ad(L).
  bool is_complete() const { return center_dim == 0 && der_dim == algebra_dim; }
};

/// Certifies completeness directly from the definition. Torus fields are
/// left empty.
CompletenessCertificate is_complete(const LieAlgebra& L);

/// Weights of the basis vectors of L under the torus, grouped by value in
/// order of first appearance.
std::vector<WeightMultiplicity> weight_multiplicities(const LieAlgebra& L, const Torus& t);

/// r_m(q) = t_m(q) + g_m(q). An empty q gives t + g_m.
LieAlgebra build_r_m(std::size_t m, const std::vector<int>& q);

/// is_complete(build_r_m(m, q)) with the torus fields filled in.
CompletenessCertificate certify_r_m(std::size_t m, const std::vector<int>& q);

/// Checks of the structural sufficient conditions for completeness against a
/// candidate Cartan subalgebra h. Failures are reported, not thrown.
struct StructureConditionsReport {
  bool cartan_abelian = false;
  /// ad(h) acts diagonally on the given basis.
  bool diagonal_action = false;
  /// L = h + sum of nonzero weight spaces, with nonzero roots present.
  bool root_decomposition = false;
  /// Every nonzero weight space is at most one-dimensional.
  bool root_spaces_one_dimensional = false;
  /// The roots of the designated weight spaces span h*.
  bool designated_roots_span = false;
  /// h together with the designated weight spaces generates L.
  bool generates = false;
  /// Every derivation maps h into the sum of the nonzero weight spaces.
  bool derivations_map_cartan_into_roots = false;

  std::vector<WeightMultiplicity> weight_multiplicities;  // nonzero weights only
  /// Basis indices spanning the designated weight spaces: root vectors
  /// outside [n, n], where n is the span of all root vectors.
  std::vector<std::size_t> designated;

  bool ok() const {
    return cartan_abelian && diagonal_action && root_decomposition &&
           root_spaces_one_dimensional && designated_roots_span && generates &&
           derivations_map_cartan_into_roots;
  }
};

StructureConditionsReport check_structure_conditions(const LieAlgebra& L, const Subspace& cartan);

/// Span of the torus elements inside build_r_m(m, q) (the last rank basis vectors).
Subspace torus_span(const LieAlgebra& r, std::size_t torus_dim);

}  // namespace liecontract
