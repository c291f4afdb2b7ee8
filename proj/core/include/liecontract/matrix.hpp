#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liecontract/rational.hpp"

namespace liecontract {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// All rows must have the same length; `cols` is only used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Vector> row_vectors() const;

  bool is_zero() const;
  bool is_diagonal() const;
  Vector diagonal() const;

  Matrix transpose() const;
  Vector apply(std::span<const Rational> x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot rule: the first nonzero entry of a row,
/// scanning columns left to right; pivot rows are scaled to a leading 1.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Matrix power, m square.
Matrix power(const Matrix& m, std::size_t exponent);

/// Incremental Gauss-Jordan elimination. Rows are fed one at a time and the
/// stored rows are kept fully reduced, so a new row only needs one pass over
/// the existing pivots. Used for large sparse systems such as the derivation
/// equations, where most rows are zero or dependent.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t cols);

  /// Returns true when the row increased the rank.
  bool add(Vector row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// The accumulated rows in canonical RREF order.
  RowEchelon echelon() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;              // unordered, fully reduced
  std::vector<std::size_t> pivot_of_row_;
  std::vector<long> row_of_pivot_;        // -1 when the column is free
};

}  // namespace liecontract
