#include "liecontract/completeness.hpp"

#include <algorithm>
#include <stdexcept>

#include "liecontract/families.hpp"
#include "liecontract/invariants.hpp"

namespace liecontract {

namespace {

Matrix diagonal_matrix(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<WeightMultiplicity> group_weights(const std::vector<Vector>& weights,
                                              bool skip_zero) {
  std::vector<WeightMultiplicity> out;
  for (const auto& w : weights) {
    if (skip_zero && is_zero(w)) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const WeightMultiplicity& m) { return m.weight == w; });
    if (it == out.end()) {
      out.push_back({w, 1});
    } else {
      ++it->dim;
    }
  }
  return out;
}

}  // namespace

WeightSystem weight_system(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  WeightSystem ws;
  ws.source_dim = n;
  std::vector<Vector> rows;
  for (const auto& sc : L.structure_constants()) {
    ws.equations.push_back({sc.i, sc.j, sc.k});
    Vector row(n);
    row[sc.i] += 1;
    row[sc.j] += 1;
    row[sc.k] -= 1;
    rows.push_back(std::move(row));
  }
  ws.solution_basis = nullspace(Matrix::from_rows(rows, n)).basis();
  ws.rank = ws.solution_basis.size();
  return ws;
}

std::size_t diagonal_rank(const LieAlgebra& L) { return weight_system(L).rank; }

Torus max_torus(const LieAlgebra& L) {
  Torus t{weight_system(L).solution_basis};
  for (const auto& w : t.generators) {
    if (!is_derivation(L, diagonal_matrix(w))) {
      throw std::logic_error("weight-system solution is not a derivation");
    }
  }
  return t;
}

LieAlgebra semidirect_product(const LieAlgebra& L, const Torus& t) {
  const std::size_t n = L.dim();
  for (const auto& w : t.generators) {
    if (w.size() != n) throw std::invalid_argument("torus generator length mismatch");
    if (!is_derivation(L, diagonal_matrix(w))) {
      throw std::invalid_argument("torus generator is not a derivation");
    }
  }
  std::vector<StructureConstant> constants = L.structure_constants();
  for (std::size_t a = 0; a < t.dim(); ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.generators[a][i].is_zero()) constants.push_back({n + a, i, i, t.generators[a][i]});
    }
  }
  std::vector<std::string> labels = L.labels();
  for (const auto& h : default_labels(t.dim(), "H")) labels.push_back(h);
  return LieAlgebra(n + t.dim(), constants, std::move(labels));
}

CompletenessCertificate is_complete(const LieAlgebra& L) {
  CompletenessCertificate cert;
  cert.algebra_dim = L.dim();
  cert.center_dim = center(L).dim();
  cert.der_dim = derivations(L).dim();
  cert.solvable = is_solvable(L);
  return cert;
}

std::vector<WeightMultiplicity> weight_multiplicities(const LieAlgebra& L, const Torus& t) {
  std::vector<Vector> weights;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Vector w;
    for (const auto& g : t.generators) w.push_back(g.at(i));
    weights.push_back(std::move(w));
  }
  return group_weights(weights, false);
}

LieAlgebra build_r_m(std::size_t m, const std::vector<int>& q) {
  const LieAlgebra g = q.empty() ? make_g_m(m) : make_g_m_q(m, q);
  return semidirect_product(g, max_torus(g));
}

CompletenessCertificate certify_r_m(std::size_t m, const std::vector<int>& q) {
  const LieAlgebra g = q.empty() ? make_g_m(m) : make_g_m_q(m, q);
  const Torus t = max_torus(g);
  CompletenessCertificate cert = is_complete(semidirect_product(g, t));
  cert.torus_dim = t.dim();
  cert.weight_multiplicities = weight_multiplicities(g, t);
  return cert;
}

Subspace torus_span(const LieAlgebra& r, std::size_t torus_dim) {
  if (torus_dim > r.dim()) throw std::invalid_argument("torus_span: torus larger than algebra");
  std::vector<Vector> vs;
  for (std::size_t i = r.dim() - torus_dim; i < r.dim(); ++i) vs.push_back(unit_vector(r.dim(), i));
  return Subspace::span(r.dim(), vs);
}

StructureConditionsReport check_structure_conditions(const LieAlgebra& L, const Subspace& cartan) {
  const std::size_t n = L.dim();
  if (cartan.ambient_dim() != n) {
    throw std::invalid_argument("check_structure_conditions: ambient dimension mismatch");
  }
  StructureConditionsReport report;
  report.cartan_abelian = bracket_span(L, cartan, cartan).is_zero();

  std::vector<Matrix> ads;
  for (const auto& h : cartan.basis()) ads.push_back(ad(L, h));
  report.diagonal_action =
      std::all_of(ads.begin(), ads.end(), [](const Matrix& m) { return m.is_diagonal(); });
  if (!report.cartan_abelian || !report.diagonal_action) return report;

  std::vector<Vector> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& m : ads) weights[i].push_back(m(i, i));
  }
  std::vector<Vector> zero_space, root_vectors;
  std::vector<std::size_t> root_indices;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(weights[i])) {
      zero_space.push_back(unit_vector(n, i));
    } else {
      root_vectors.push_back(unit_vector(n, i));
      root_indices.push_back(i);
    }
  }
  report.root_decomposition =
      Subspace::span(n, zero_space) == cartan && (cartan.is_zero() || !root_indices.empty());

  report.weight_multiplicities = group_weights(weights, true);
  report.root_spaces_one_dimensional =
      std::all_of(report.weight_multiplicities.begin(), report.weight_multiplicities.end(),
                  [](const WeightMultiplicity& w) { return w.dim <= 1; });

  const Subspace nil = Subspace::span(n, root_vectors);
  const Subspace nil_derived = bracket_span(L, nil, nil);
  std::vector<Vector> designated_weights;
  std::vector<Vector> generators = cartan.basis();
  for (std::size_t i : root_indices) {
    if (nil_derived.contains(unit_vector(n, i))) continue;
    report.designated.push_back(i);
    designated_weights.push_back(weights[i]);
    generators.push_back(unit_vector(n, i));
  }
  report.designated_roots_span =
      Subspace::span(cartan.dim(), designated_weights).dim() == cartan.dim();
  report.generates = generated_subalgebra(L, generators).is_full();

  report.derivations_map_cartan_into_roots = true;
  const Subspace der = derivations(L);
  for (const auto& flat : der.basis()) {
    const Matrix d = unflatten(flat, n);
    for (const auto& h : cartan.basis()) {
      if (!nil.contains(d.apply(h))) {
        report.derivations_map_cartan_into_roots = false;
        break;
      }
    }
    if (!report.derivations_map_cartan_into_roots) break;
  }
  return report;
}

}  // namespace liecontract
