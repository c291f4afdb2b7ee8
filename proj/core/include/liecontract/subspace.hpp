#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liecontract/matrix.hpp"

namespace liecontract {

/// A linear subspace of Q^n, stored as the rows of its reduced row echelon
/// basis. The representation is canonical: two subspaces are equal as sets
/// iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);
  static Subspace from_echelon(const RowEchelon& e);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_dim_; }

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  /// Coordinates of a subspace member relative to basis(); v must be contained.
  Vector coordinates(std::span<const Rational> v) const;

  /// Unit vectors e_i for the non-pivot columns; they span a complement.
  std::vector<Vector> complement_basis() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}, dimension cols - rank(m).
Subspace nullspace(const Matrix& m);

/// The annihilator {x : <x, a> = 0 for all a in s} under the standard pairing.
Subspace annihilator(const Subspace& s);

/// Throws std::invalid_argument on ambient dimension mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool is_subset(const Subspace& a, const Subspace& b);

}  // namespace liecontract
