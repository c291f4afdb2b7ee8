#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecontract/lie_algebra.hpp"

namespace liecontract {

/// [L, L].
Subspace derived_algebra(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);

/// {x : [x, s] = 0 for all s in S}.
Subspace centralizer(const LieAlgebra& L, const Subspace& s);

/// Smallest subalgebra containing the given vectors.
Subspace generated_subalgebra(const LieAlgebra& L, const std::vector<Vector>& generators);

/// A descending chain of ideals, computed until it stabilizes. `terms`
/// starts with L itself; the final term is either 0 or the stable term.
struct SeriesReport {
  std::vector<Subspace> terms;
  std::vector<std::size_t> dims;
  /// First index i with term i = 0 (nilindex for the lower central series,
  /// derived length for the derived series); empty when the chain
  /// stabilizes at a nonzero ideal.
  std::optional<std::size_t> nilindex;
};

/// C^0 = L, C^i = [L, C^{i-1}].
SeriesReport lower_central_series(const LieAlgebra& L);
/// D^0 = L, D^i = [D^{i-1}, D^{i-1}].
SeriesReport derived_series(const LieAlgebra& L);

/// Throws NotNilpotentError.
std::size_t nilindex(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

/// Which index names the whole algebra in the lower central series.
enum class SeriesIndexing {
  kZeroBased,  // C^0 = L
  kOneBased,   // C^1 = L
};

/// Lower central series term under the chosen indexing; indices past the
/// end of the chain return the final term. kOneBased with index 0 is L.
Subspace lcs_term(const LieAlgebra& L, std::size_t index, SeriesIndexing indexing);

/// For filiform-type algebras: whether C^m sits inside its own centralizer
/// (i.e. is abelian) and whether C^{m-1} does.
struct CentralizerDichotomy {
  bool upper_inside_centralizer = false;  // C^m  subset of C_L(C^m)
  bool lower_inside_centralizer = false;  // C^{m-1} subset of C_L(C^{m-1})
  bool holds() const { return upper_inside_centralizer && !lower_inside_centralizer; }
};

CentralizerDichotomy centralizer_dichotomy(const LieAlgebra& L, std::size_t m,
                                           SeriesIndexing indexing);

/// Row-major flattening: entry D(r, c) lives at index r * n + c. Column c of
/// D is the image of e_c.
Vector flatten(const Matrix& d);
Matrix unflatten(std::span<const Rational> v, std::size_t n);

/// Dense derivation system: one row per (i < j, k) in lexicographic order,
/// one column per unknown D(r, c) in row-major order. Row (i, j, k) is the
/// e_k component of D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j].
Matrix derivation_system(const LieAlgebra& L);

/// Der(L) as a subspace of flattened n x n matrices.
Subspace derivations(const LieAlgebra& L);

bool is_derivation(const LieAlgebra& L, const Matrix& d);

/// span{ad(e_i)}, flattened.
Subspace inner_derivations(const LieAlgebra& L);

/// Jordan block sizes of a nilpotent operator, non-increasing, from the rank
/// profile: #blocks of size >= s equals rank(A^{s-1}) - rank(A^s).
/// Throws NotNilpotentError if some power does not vanish.
std::vector<std::size_t> jordan_block_sizes(const Matrix& a);

struct CharacteristicSequence {
  std::vector<std::size_t> blocks;

  /// Of the form (n', 1, ..., 1).
  bool is_linear() const;
  std::string str(const std::string& sep = ",") const;

  friend auto operator<=>(const CharacteristicSequence&,
                          const CharacteristicSequence&) = default;
};

/// Lexicographically largest Jordan type of ad(X) over X outside [L, L],
/// maximized over a generic combination (prime coefficients) of a fixed
/// complement basis of [L, L] and each complement basis vector alone.
/// Throws NotNilpotentError.
CharacteristicSequence characteristic_sequence(const LieAlgebra& L);

/// n - dim [L, L].
std::size_t betti1(const LieAlgebra& L);

/// For nilpotent L: a one-dimensional abelian ideal splits off as a direct
/// factor iff the center is not contained in [L, L].
bool has_abelian_direct_factor(const LieAlgebra& L);

}  // namespace liecontract
