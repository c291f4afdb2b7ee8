#include "liecontract/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "liecontract/errors.hpp"

namespace liecontract {

namespace {

SeriesReport descending_series(const LieAlgebra& L, bool derived) {
  SeriesReport report;
  Subspace current = Subspace::full(L.dim());
  const Subspace whole = current;
  for (;;) {
    report.terms.push_back(current);
    report.dims.push_back(current.dim());
    if (current.is_zero()) {
      report.nilindex = report.terms.size() - 1;
      break;
    }
    Subspace next = bracket_span(L, derived ? current : whole, current);
    if (next == current) break;
    current = std::move(next);
  }
  return report;
}

std::vector<std::size_t> first_primes(std::size_t count) {
  std::vector<std::size_t> primes;
  for (std::size_t candidate = 2; primes.size() < count; ++candidate) {
    if (std::none_of(primes.begin(), primes.end(),
                     [&](std::size_t p) { return candidate % p == 0; })) {
      primes.push_back(candidate);
    }
  }
  return primes;
}

// Dense C[i][j][k] including both orderings of (i, j).
class DenseTensor {
 public:
  explicit DenseTensor(const LieAlgebra& L) : n_(L.dim()), c_(n_ * n_ * n_) {
    for (const auto& sc : L.structure_constants()) {
      at(sc.i, sc.j, sc.k) = sc.c;
      at(sc.j, sc.i, sc.k) = -sc.c;
    }
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

 private:
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  std::size_t n_;
  std::vector<Rational> c_;
};

// Sparse row (i, j, k) of the derivation system; unknown D(r, c) is r * n + c.
std::map<std::size_t, Rational> derivation_row(const LieAlgebra& L, const DenseTensor& c,
                                               std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = L.dim();
  std::map<std::size_t, Rational> row;
  for (const auto& t : L.terms(i, j)) row[k * n + t.k] += t.c;  // D[e_i, e_j]
  for (std::size_t r = 0; r < n; ++r) {
    if (!c(r, j, k).is_zero()) row[r * n + i] -= c(r, j, k);  // [D e_i, e_j]
    if (!c(i, r, k).is_zero()) row[r * n + j] -= c(i, r, k);  // [e_i, D e_j]
  }
  std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  return row;
}

}  // namespace

Subspace derived_algebra(const LieAlgebra& L) {
  std::vector<Vector> products;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      if (!L.terms(i, j).empty()) products.push_back(L.bracket_basis(i, j));
    }
  }
  return Subspace::span(L.dim(), products);
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.dim())); }

Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
  const std::size_t n = L.dim();
  if (s.ambient_dim() != n) throw std::invalid_argument("centralizer: ambient dimension mismatch");
  // [x, v] = -ad(v) x, so stack the rows of ad(v) over the basis of S.
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) {
    for (auto& row : ad(L, v).row_vectors()) {
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return nullspace(Matrix::from_rows(rows, n));
}

Subspace generated_subalgebra(const LieAlgebra& L, const std::vector<Vector>& generators) {
  Subspace current = Subspace::span(L.dim(), generators);
  for (;;) {
    Subspace next = sum(current, bracket_span(L, current, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

SeriesReport lower_central_series(const LieAlgebra& L) { return descending_series(L, false); }
SeriesReport derived_series(const LieAlgebra& L) { return descending_series(L, true); }

std::size_t nilindex(const LieAlgebra& L) {
  const auto report = lower_central_series(L);
  if (!report.nilindex) throw NotNilpotentError();
  return *report.nilindex;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).nilindex.has_value(); }
bool is_solvable(const LieAlgebra& L) { return derived_series(L).nilindex.has_value(); }

Subspace lcs_term(const LieAlgebra& L, std::size_t index, SeriesIndexing indexing) {
  if (indexing == SeriesIndexing::kOneBased) index = index == 0 ? 0 : index - 1;
  const auto report = lower_central_series(L);
  return report.terms[std::min(index, report.terms.size() - 1)];
}

CentralizerDichotomy centralizer_dichotomy(const LieAlgebra& L, std::size_t m,
                                           SeriesIndexing indexing) {
  if (m == 0) throw std::invalid_argument("centralizer_dichotomy: m must be positive");
  auto inside_own_centralizer = [&](std::size_t index) {
    const Subspace term = lcs_term(L, index, indexing);
    return is_subset(term, centralizer(L, term));
  };
  return {inside_own_centralizer(m), inside_own_centralizer(m - 1)};
}

Vector flatten(const Matrix& d) {
  Vector v;
  v.reserve(d.rows() * d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) v.insert(v.end(), d.row(r).begin(), d.row(r).end());
  return v;
}

Matrix unflatten(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("unflatten: length is not n*n");
  Matrix d(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
  }
  return d;
}

Matrix derivation_system(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const DenseTensor c(L);
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  Matrix m(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (auto& [col, value] : derivation_row(L, c, i, j, k)) m(row, col) = value;
      }
    }
  }
  return m;
}

Subspace derivations(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const DenseTensor c(L);
  EchelonAccumulator acc(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto sparse = derivation_row(L, c, i, j, k);
        if (sparse.empty()) continue;
        Vector row(n * n);
        for (auto& [col, value] : sparse) row[col] = std::move(value);
        acc.add(std::move(row));
      }
    }
  }
  const RowEchelon e = acc.echelon();
  std::vector<bool> pivot(n * n, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < n * n; ++f) {
    if (pivot[f]) continue;
    Vector x(n * n);
    x[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = -e.reduced(r, f);
    kernel.push_back(std::move(x));
  }
  return Subspace::span(n * n, kernel);
}

bool is_derivation(const LieAlgebra& L, const Matrix& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("is_derivation: shape mismatch");
  std::vector<Vector> images;
  for (std::size_t c = 0; c < n; ++c) {
    Vector col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = d(r, c);
    images.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d.apply(L.bracket_basis(i, j));
      const Vector a = bracket(L, images[i], unit_vector(n, j));
      const Vector b = bracket(L, unit_vector(n, i), images[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs[k] != a[k] + b[k]) return false;
      }
    }
  }
  return true;
}

Subspace inner_derivations(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(flatten(ad(L, unit_vector(n, i))));
  return Subspace::span(n * n, ads);
}

std::vector<std::size_t> jordan_block_sizes(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("jordan_block_sizes: matrix not square");
  std::vector<std::size_t> ranks{n};
  Matrix p = Matrix::identity(n);
  while (ranks.back() != 0) {
    if (ranks.size() > n + 1) throw NotNilpotentError();
    p = p * a;
    const std::size_t r = rank(p);
    if (r == ranks.back()) throw NotNilpotentError();
    ranks.push_back(r);
  }
  // at_least[s] = #blocks of size >= s.
  std::vector<std::size_t> blocks;
  for (std::size_t s = ranks.size() - 1; s >= 1; --s) {
    const std::size_t at_least = ranks[s - 1] - ranks[s];
    const std::size_t above = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
    blocks.insert(blocks.end(), at_least - above, s);
  }
  return blocks;
}

bool CharacteristicSequence::is_linear() const {
  return std::all_of(blocks.begin() + (blocks.empty() ? 0 : 1), blocks.end(),
                     [](std::size_t b) { return b == 1; });
}

std::string CharacteristicSequence::str(const std::string& sep) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? sep : "") << blocks[i];
  return os.str();
}

CharacteristicSequence characteristic_sequence(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw NotNilpotentError();
  const std::size_t n = L.dim();
  const std::vector<Vector> complement = derived_algebra(L).complement_basis();
  if (complement.empty()) return {};

  std::vector<Vector> candidates;
  Vector generic(n);
  const auto primes = first_primes(complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      generic[c] += Rational(static_cast<long>(primes[i])) * complement[i][c];
    }
  }
  candidates.push_back(std::move(generic));
  candidates.insert(candidates.end(), complement.begin(), complement.end());

  CharacteristicSequence best;
  for (const auto& x : candidates) {
    CharacteristicSequence seq{jordan_block_sizes(ad(L, x))};
    if (best.blocks.empty() || best < seq) best = std::move(seq);
  }
  return best;
}

std::size_t betti1(const LieAlgebra& L) { return L.dim() - derived_algebra(L).dim(); }

bool has_abelian_direct_factor(const LieAlgebra& L) {
  return !is_subset(center(L), derived_algebra(L));
}

}  // namespace liecontract
