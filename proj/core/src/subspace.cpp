#include "liecontract/subspace.hpp"

#include <stdexcept>

namespace liecontract {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace ambient dimension mismatch: " +
                                std::to_string(a.ambient_dim()) + " vs " +
                                std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(unit_vector(n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  EchelonAccumulator acc(n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("Subspace::span: vector length mismatch");
    if (!liecontract::is_zero(v)) acc.add(v);
  }
  return from_echelon(acc.echelon());
}

Subspace Subspace::from_echelon(const RowEchelon& e) {
  Subspace s(e.reduced.cols());
  for (std::size_t r = 0; r < e.rank; ++r) {
    s.basis_.emplace_back(e.reduced.row(r).begin(), e.reduced.row(r).end());
  }
  s.pivots_.assign(e.pivots.begin(), e.pivots.begin() + static_cast<long>(e.rank));
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::contains: length mismatch");
  Vector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational f = residual[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (!basis_[r][c].is_zero()) residual[c].sub_mul(f, basis_[r][c]);
    }
  }
  return liecontract::is_zero(residual);
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

std::vector<Vector> Subspace::complement_basis() const {
  std::vector<bool> pivot(ambient_dim_, false);
  for (auto p : pivots_) pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (!pivot[i]) out.push_back(unit_vector(ambient_dim_, i));
  }
  return out;
}

Subspace nullspace(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> pivot(m.cols(), false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = -e.reduced(r, f);
    kernel.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), kernel);
}

Subspace annihilator(const Subspace& s) {
  return nullspace(Matrix::from_rows(s.basis(), s.ambient_dim()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

bool is_subset(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  for (const auto& v : a.basis()) {
    if (!b.contains(v)) return false;
  }
  return true;
}

}  // namespace liecontract
