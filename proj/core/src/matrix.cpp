#include "liecontract/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace liecontract {

namespace {

// dst -= f * src, touching only the nonzero entries of src from `from` on.
void sub_scaled(std::span<Rational> dst, const Rational& f, std::span<const Rational> src,
                std::size_t from = 0) {
  for (std::size_t c = from; c < src.size(); ++c) {
    if (!src[c].is_zero()) dst[c].sub_mul(f, src[c]);
  }
}

void scale(std::span<Rational> v, const Rational& f, std::size_t from = 0) {
  for (std::size_t c = from; c < v.size(); ++c) {
    if (!v[c].is_zero()) v[c] *= f;
  }
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows in Matrix::from_rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

bool Matrix::is_zero() const { return liecontract::is_zero(data_); }

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

Vector Matrix::diagonal() const {
  Vector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      sub_scaled(p.row(r), -x, b.row(k));
    }
  }
  return p;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, 0, {}};
  Matrix& r = out.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t p = lead;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != lead) {
      auto a = r.row(p);
      auto b = r.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Rational inv = Rational(1) / r(lead, col);
    scale(r.row(lead), inv, col);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      const Rational f = r(i, col);
      sub_scaled(r.row(i), f, r.row(lead), col);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank(const Matrix& m) {
  EchelonAccumulator acc(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    acc.add(Vector(m.row(r).begin(), m.row(r).end()));
  }
  return acc.rank();
}

Matrix power(const Matrix& m, std::size_t exponent) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power: matrix not square");
  Matrix result = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < exponent; ++i) result = result * m;
  return result;
}

EchelonAccumulator::EchelonAccumulator(std::size_t cols)
    : cols_(cols), row_of_pivot_(cols, -1) {}

bool EchelonAccumulator::add(Vector row) {
  if (row.size() != cols_) throw std::invalid_argument("EchelonAccumulator: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c].is_zero() || row_of_pivot_[c] < 0) continue;
    const Rational f = row[c];
    sub_scaled(row, f, rows_[static_cast<std::size_t>(row_of_pivot_[c])]);
  }
  std::size_t p = 0;
  while (p < cols_ && row[p].is_zero()) ++p;
  if (p == cols_) return false;

  scale(row, Rational(1) / row[p], p);
  for (auto& existing : rows_) {
    if (existing[p].is_zero()) continue;
    const Rational f = existing[p];
    sub_scaled(existing, f, row);
  }
  row_of_pivot_[p] = static_cast<long>(rows_.size());
  pivot_of_row_.push_back(p);
  rows_.push_back(std::move(row));
  return true;
}

RowEchelon EchelonAccumulator::echelon() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  RowEchelon out{Matrix(rows_.size(), cols_), rows_.size(), {}};
  for (std::size_t r = 0; r < order.size(); ++r) {
    std::copy(rows_[order[r]].begin(), rows_[order[r]].end(), out.reduced.row(r).begin());
    out.pivots.push_back(pivot_of_row_[order[r]]);
  }
  return out;
}

}  // namespace liecontract
