#include "liecontract/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "liecontract/errors.hpp"

namespace liecontract {

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants,
                       std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), pairs_(dim * dim) {
  if (labels_.empty()) labels_ = default_labels(dim);
  if (labels_.size() != dim) throw std::invalid_argument("label count does not match dimension");

  std::map<std::size_t, Rational> acc;  // key: pair_index * dim + k
  for (const auto& sc : constants) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim) {
      throw std::invalid_argument("structure constant index out of range");
    }
    if (sc.c.is_zero()) continue;
    if (sc.i == sc.j) throw std::invalid_argument("nonzero self-bracket violates antisymmetry");
    if (sc.i < sc.j) {
      acc[pair_index(sc.i, sc.j) * dim + sc.k] += sc.c;
    } else {
      acc[pair_index(sc.j, sc.i) * dim + sc.k] -= sc.c;
    }
  }
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    pairs_[key / dim].push_back({key % dim, std::move(c)});
  }
}

std::span<const BracketTerm> LieAlgebra::terms(std::size_t i, std::size_t j) const {
  if (i >= j || j >= dim_) throw std::out_of_range("LieAlgebra::terms requires i < j < dim");
  return pairs_[pair_index(i, j)];
}

Rational LieAlgebra::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  for (const auto& t : terms(flip ? j : i, flip ? i : j)) {
    if (t.k == k) return flip ? -t.c : t.c;
  }
  return 0;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  if (i == j) return v;
  const bool flip = i > j;
  for (const auto& t : terms(flip ? j : i, flip ? i : j)) v[t.k] = flip ? -t.c : t.c;
  return v;
}

std::vector<StructureConstant> LieAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (const auto& t : pairs_[pair_index(i, j)]) out.push_back({i, j, t.k, t.c});
    }
  }
  return out;
}

std::size_t LieAlgebra::nonzero_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(pairs_.begin(), pairs_.end(), [](const auto& p) { return !p.empty(); }));
}

LieAlgebra LieAlgebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != dim_) throw std::invalid_argument("label count does not match dimension");
  LieAlgebra copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

bool tensor_equal(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim() == b.dim() && a.structure_constants() == b.structure_constants();
}

Vector bracket(const LieAlgebra& L, std::span<const Rational> x, std::span<const Rational> y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: length mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ts = L.terms(i, j);
      if (ts.empty()) continue;
      Rational w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      for (const auto& t : ts) out[t.k] += w * t.c;
    }
  }
  return out;
}

Matrix ad(const LieAlgebra& L, std::span<const Rational> x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw std::invalid_argument("ad: length mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == i) continue;
      const bool flip = i > c;
      for (const auto& t : L.terms(flip ? c : i, flip ? i : c)) {
        m(t.k, c) += flip ? -(x[i] * t.c) : x[i] * t.c;
      }
    }
  }
  return m;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vector> products;
  for (const auto& u : a.basis()) {
    for (const auto& v : b.basis()) products.push_back(bracket(L, u, v));
  }
  return Subspace::span(L.dim(), products);
}

JacobiReport check_jacobi(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  JacobiReport report;
  // [e_a, [e_b, e_c]] accumulated into out.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, Vector& out) {
    if (b == c) return;
    const bool flip = b > c;
    for (const auto& inner : L.terms(flip ? c : b, flip ? b : c)) {
      if (inner.k == a) continue;
      const Rational w = flip ? -inner.c : inner.c;
      const bool flip2 = a > inner.k;
      for (const auto& outer : L.terms(flip2 ? inner.k : a, flip2 ? a : inner.k)) {
        if (flip2) {
          out[outer.k] -= w * outer.c;
        } else {
          out[outer.k] += w * outer.c;
        }
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum(n);
        nested(i, j, k, sum);
        nested(j, k, i, sum);
        nested(k, i, j, sum);
        for (std::size_t s = 0; s < n; ++s) {
          if (!sum[s].is_zero()) report.violations.push_back({i, j, k, s, sum[s]});
        }
      }
    }
  }
  return report;
}

LieAlgebra from_maurer_cartan(const MaurerCartanForm& form) {
  if (form.two_forms.size() > form.dim) {
    throw std::invalid_argument("more structure equations than the dimension");
  }
  std::vector<StructureConstant> constants;
  for (std::size_t k = 0; k < form.two_forms.size(); ++k) {
    for (const auto& t : form.two_forms[k]) {
      if (t.i >= t.j || t.j >= form.dim) {
        throw std::invalid_argument("structure equation term requires i < j < dim");
      }
      constants.push_back({t.i, t.j, k, t.c});
    }
  }
  LieAlgebra L(form.dim, constants, form.labels);
  const JacobiReport report = check_jacobi(L);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw JacobiError("Jacobi identity fails at (" + std::to_string(v.i + 1) + "," +
                      std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) +
                      ") component " + std::to_string(v.s + 1) + ", residual " +
                      v.residual.str());
  }
  return L;
}

std::string format_bracket_table(const LieAlgebra& L) {
  std::ostringstream os;
  const auto& labels = L.labels();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const auto ts = L.terms(i, j);
      if (ts.empty()) continue;
      os << "[" << labels[i] << ", " << labels[j] << "] =";
      bool first = true;
      for (const auto& t : ts) {
        const bool negative = t.c.sign() < 0;
        const Rational mag = negative ? -t.c : t.c;
        if (first) {
          os << (negative ? " -" : " ");
        } else {
          os << (negative ? " - " : " + ");
        }
        if (mag != Rational(1)) os << mag << " ";
        os << labels[t.k];
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace liecontract
