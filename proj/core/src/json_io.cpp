#include "liecontract/json_io.hpp"

#include <map>
#include <stdexcept>

#include "liecontract/errors.hpp"

namespace liecontract {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("algebra json: " + message);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_field(const json& j, const char* key, std::size_t dim) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a positive integer");
  const auto idx = v.get<std::size_t>();
  if (idx < 1 || idx > dim) fail(std::string("index '") + key + "' out of range");
  return idx - 1;
}

Rational rational_field(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail("coefficients must be \"p\" or \"p/q\" strings");
}

OrderedJson weight_to_json(const Vector& w) {
  OrderedJson out = OrderedJson::array();
  for (const auto& x : w) out.push_back(x.str());
  return out;
}

}  // namespace

OrderedJson family_to_json(const FamilySpec& spec) {
  OrderedJson j;
  j["name"] = std::string(family_name(spec.family));
  const bool uses_n = spec.family == Family::kModelFiliform || spec.family == Family::kAbelian;
  j[uses_n ? "n" : "m"] = spec.size;
  if (spec.family == Family::kGmQ) j["q"] = spec.q;
  return j;
}

FamilySpec family_from_json(const json& j) {
  FamilySpec spec;
  const json& name = field(j, "name");
  if (!name.is_string()) fail("family name must be a string");
  spec.family = parse_family(name.get<std::string>());
  const bool uses_n = spec.family == Family::kModelFiliform || spec.family == Family::kAbelian;
  const json& size = field(j, uses_n ? "n" : "m");
  if (!size.is_number_unsigned()) fail("family size must be a nonnegative integer");
  spec.size = size.get<std::size_t>();
  if (j.contains("q")) spec.q = j.at("q").get<std::vector<int>>();
  spec.validate();
  return spec;
}

OrderedJson algebra_to_json(const LieAlgebra& L, const std::optional<FamilySpec>& family) {
  OrderedJson j;
  if (family) j["family"] = family_to_json(*family);
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  OrderedJson brackets = OrderedJson::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      const auto terms = L.terms(i, k);
      if (terms.empty()) continue;
      OrderedJson coeffs = OrderedJson::object();
      for (const auto& t : terms) coeffs[std::to_string(t.k + 1)] = t.c.str();
      brackets.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", std::move(coeffs)}});
    }
  }
  j["brackets"] = std::move(brackets);
  return j;
}

std::string emit_algebra(const LieAlgebra& L, const std::optional<FamilySpec>& family) {
  return algebra_to_json(L, family).dump(2) + "\n";
}

AlgebraDocument algebra_from_json(const json& j) {
  const json& dim_field = field(j, "dim");
  if (!dim_field.is_number_unsigned()) fail("'dim' must be a nonnegative integer");
  const auto dim = dim_field.get<std::size_t>();

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const json& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != dim) fail("'basis' must list exactly dim labels");
    for (const auto& b : basis) {
      if (!b.is_string()) fail("basis labels must be strings");
      labels.push_back(b.get<std::string>());
    }
  }

  const json& brackets = field(j, "brackets");
  if (!brackets.is_array()) fail("'brackets' must be an array");
  std::vector<StructureConstant> constants;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const auto& b : brackets) {
    const std::size_t i = index_field(b, "i", dim);
    const std::size_t k_pair = index_field(b, "j", dim);
    if (i >= k_pair) fail("bracket entries require i < j");
    if (seen[{i, k_pair}]) fail("duplicate bracket entry");
    seen[{i, k_pair}] = true;
    const json& coeffs = field(b, "coeffs");
    if (!coeffs.is_object()) fail("'coeffs' must be an object");
    for (const auto& [key, value] : coeffs.items()) {
      std::size_t k = 0;
      try {
        std::size_t consumed = 0;
        k = std::stoul(key, &consumed);
        if (consumed != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("coefficient key '" + key + "' is not an index");
      }
      if (k < 1 || k > dim) fail("coefficient index out of range");
      constants.push_back({i, k_pair, k - 1, rational_field(value)});
    }
  }

  AlgebraDocument doc{LieAlgebra(dim, constants, labels), std::nullopt};
  if (j.contains("family")) doc.family = family_from_json(j.at("family"));
  const auto report = check_jacobi(doc.algebra);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    fail("Jacobi identity fails at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
         "," + std::to_string(v.k + 1) + ")");
  }
  return doc;
}

AlgebraDocument parse_algebra(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  return algebra_from_json(j);
}

OrderedJson exponents_to_json(const ExponentVector& a) { return OrderedJson(a.values); }

OrderedJson parametric_law_to_json(const ParametricLaw& p) {
  OrderedJson entries = OrderedJson::array();
  for (const auto& e : p.entries) {
    entries.push_back(
        {{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"c", e.c.str()}, {"e", e.e}});
  }
  OrderedJson j;
  j["dim"] = p.dim;
  j["basis"] = p.labels;
  j["entries"] = std::move(entries);
  return j;
}

ParametricLaw parametric_law_from_json(const json& j) {
  ParametricLaw p;
  p.dim = field(j, "dim").get<std::size_t>();
  p.labels = j.contains("basis") ? j.at("basis").get<std::vector<std::string>>()
                                 : default_labels(p.dim);
  for (const auto& e : field(j, "entries")) {
    const std::size_t i = index_field(e, "i", p.dim);
    const std::size_t jj = index_field(e, "j", p.dim);
    if (i >= jj) fail("parametric entries require i < j");
    const json& exponent = field(e, "e");
    if (!exponent.is_number_integer()) fail("exponent must be an integer");
    p.entries.push_back({i, jj, index_field(e, "k", p.dim), rational_field(field(e, "c")),
                         exponent.get<std::int64_t>()});
  }
  return p;
}

OrderedJson certificate_to_json(const CompletenessCertificate& cert) {
  OrderedJson j;
  j["algebra_dim"] = cert.algebra_dim;
  j["center_dim"] = cert.center_dim;
  j["der_dim"] = cert.der_dim;
  j["torus_dim"] = cert.torus_dim;
  j["solvable"] = cert.solvable;
  j["is_complete"] = cert.is_complete();
  OrderedJson weights = OrderedJson::array();
  for (const auto& w : cert.weight_multiplicities) {
    weights.push_back({{"weight", weight_to_json(w.weight)}, {"dim", w.dim}});
  }
  j["weight_multiplicities"] = std::move(weights);
  return j;
}

OrderedJson necessary_conditions_to_json(const NecessaryConditionsReport& r) {
  auto item = [](std::size_t mu, std::size_t lambda, Verdict v) {
    return OrderedJson{{"mu", mu}, {"lambda", lambda}, {"verdict", std::string(verdict_name(v))}};
  };
  OrderedJson j;
  j["der"] = item(r.der_mu, r.der_lambda, r.derivations());
  j["derived"] = item(r.derived_mu, r.derived_lambda, r.derived());
  j["center"] = item(r.center_mu, r.center_lambda, r.center());
  j["rank"] = item(r.rank_mu, r.rank_lambda, r.rank());
  j["all_hold"] = r.all_hold();
  return j;
}

}  // namespace liecontract
