#include "liecontract/families.hpp"

#include <stdexcept>

namespace liecontract {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void add_combinations(int lo, int hi, std::size_t k, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    current.push_back(v);
    add_combinations(v + 1, hi, k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kGm: return "g_m";
    case Family::kGmQ: return "g_m_q";
    case Family::kModelFiliform: return "model_filiform";
    case Family::kHeisenbergPlusAbelian: return "heisenberg_plus_abelian";
    case Family::kAbelian: return "abelian";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "g_m" || name == "gm") return Family::kGm;
  if (name == "g_m_q" || name == "gmq") return Family::kGmQ;
  if (name == "model_filiform" || name == "filiform") return Family::kModelFiliform;
  if (name == "heisenberg_plus_abelian" || name == "heisenberg") {
    return Family::kHeisenbergPlusAbelian;
  }
  if (name == "abelian") return Family::kAbelian;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

void validate_q_list(std::size_t m, const std::vector<int>& q) {
  const int upper = static_cast<int>(m) + 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    require(q[i] >= 3 && q[i] <= upper, "q must satisfy 3 ≤ q ≤ m+1 (got q=" +
                                            std::to_string(q[i]) + ", m=" + std::to_string(m) +
                                            ")");
    require(i == 0 || q[i - 1] < q[i], "q list must be strictly increasing (got " +
                                           join_ints(q) + ")");
  }
}

void FamilySpec::validate() const {
  switch (family) {
    case Family::kGm:
      require(size >= 4, "g_m requires m ≥ 4");
      require(q.empty(), "g_m takes no q list");
      break;
    case Family::kGmQ:
      require(size >= 4, "g_m(q) requires m ≥ 4");
      require(!q.empty(), "g_m(q) requires a nonempty q list");
      validate_q_list(size, q);
      break;
    case Family::kModelFiliform:
      require(size >= 3, "model filiform algebra requires n ≥ 3");
      require(q.empty(), "model filiform algebra takes no q list");
      break;
    case Family::kHeisenbergPlusAbelian:
      require(size >= 2, "heisenberg_plus_abelian requires m ≥ 2");
      require(q.empty(), "heisenberg_plus_abelian takes no q list");
      break;
    case Family::kAbelian:
      require(q.empty(), "abelian algebra takes no q list");
      break;
  }
}

std::string FamilySpec::display_name() const {
  const std::string s = std::to_string(size);
  switch (family) {
    case Family::kGm: return "g_" + s;
    case Family::kGmQ: return "g_" + s + "(" + join_ints(q) + ")";
    case Family::kModelFiliform: return "L_" + s;
    case Family::kHeisenbergPlusAbelian: return "h_" + std::to_string(size - 1) + "+C^2";
    case Family::kAbelian: return "C^" + s;
  }
  return s;
}

std::set<int> deleted_chain_targets(std::size_t m, const std::vector<int>& q) {
  std::set<int> out;
  for (int qi : q) {
    out.insert(qi);
    out.insert(2 * static_cast<int>(m) + 2 - qi);
  }
  return out;
}

MaurerCartanForm g_m_structure_equations(std::size_t m, const std::vector<int>& q) {
  const std::size_t n = 2 * m + 1;
  const auto deleted = deleted_chain_targets(m, q);
  MaurerCartanForm form{n, std::vector<std::vector<MaurerCartanTerm>>(n), {}};
  // 0-based: d(w_j) lives at index j-1.
  for (std::size_t j = 3; j <= 2 * m; ++j) {
    if (deleted.count(static_cast<int>(j))) continue;
    form.two_forms[j - 1].push_back({0, j - 2, 1});
  }
  for (std::size_t j = 2; j <= m; ++j) {
    form.two_forms[n - 1].push_back({j - 1, 2 * m - j, j % 2 == 0 ? 1 : -1});
  }
  return form;
}

LieAlgebra make_g_m(std::size_t m) {
  FamilySpec{Family::kGm, m, {}}.validate();
  return from_maurer_cartan(g_m_structure_equations(m));
}

LieAlgebra make_g_m_q(std::size_t m, const std::vector<int>& q) {
  FamilySpec{Family::kGmQ, m, q}.validate();
  return from_maurer_cartan(g_m_structure_equations(m, q));
}

LieAlgebra make_model_filiform(std::size_t n) {
  FamilySpec{Family::kModelFiliform, n, {}}.validate();
  std::vector<StructureConstant> constants;
  for (std::size_t j = 1; j + 1 < n; ++j) constants.push_back({0, j, j + 1, 1});
  return LieAlgebra(n, constants);
}

LieAlgebra make_heisenberg_plus_abelian(std::size_t m) {
  FamilySpec{Family::kHeisenbergPlusAbelian, m, {}}.validate();
  const std::size_t n = 2 * m + 1;
  std::vector<StructureConstant> constants;
  for (std::size_t j = 2; j <= m; ++j) {
    constants.push_back({j - 1, 2 * m - j, n - 1, j % 2 == 0 ? 1 : -1});
  }
  return LieAlgebra(n, constants);
}

LieAlgebra make_abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra make_family(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::kGm: return make_g_m(spec.size);
    case Family::kGmQ: return make_g_m_q(spec.size, spec.q);
    case Family::kModelFiliform: return make_model_filiform(spec.size);
    case Family::kHeisenbergPlusAbelian: return make_heisenberg_plus_abelian(spec.size);
    case Family::kAbelian: return make_abelian(spec.size);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<std::vector<int>> enumerate_q_lists(std::size_t m, std::size_t max_k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  for (std::size_t k = 1; k <= max_k; ++k) {
    add_combinations(3, static_cast<int>(m) + 1, k, current, out);
  }
  return out;
}

}  // namespace liecontract
