// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "liecontract/liecontract.hpp"
#include "oracles.hpp"

using namespace liecontract;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Collects failures; the first few are kept for the report line.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (first_.size() < 3) first_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checks_ - failures_ << "/" << checks_ << " checks)";
    for (const auto& f : first_) os << "; failed: " << f;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> first_;
};

std::string name(std::size_t m, const std::vector<int>& q) {
  return q.empty() ? FamilySpec{Family::kGm, m, {}}.display_name()
                   : FamilySpec{Family::kGmQ, m, q}.display_name();
}

// (m, q) pairs with m in [lo, hi] and 1 <= k <= max_k.
std::vector<std::pair<std::size_t, std::vector<int>>> grid(std::size_t lo, std::size_t hi,
                                                           std::size_t max_k) {
  std::vector<std::pair<std::size_t, std::vector<int>>> out;
  for (std::size_t m = lo; m <= hi; ++m) {
    for (auto& q : enumerate_q_lists(m, max_k)) out.emplace_back(m, std::move(q));
  }
  return out;
}

Outcome family_soundness() {
  Tally t;
  for (std::size_t m = 4; m <= 8; ++m) t.expect(check_jacobi(make_g_m(m)).ok(), name(m, {}));
  for (const auto& [m, q] : grid(4, 8, 3)) t.expect(check_jacobi(make_g_m_q(m, q)).ok(), name(m, q));
  return t.outcome("Jacobi holds for g_m and g_m(q), m=4..8, k<=3");
}

Outcome contraction_limits() {
  Tally t;
  for (const auto& [m, q] : grid(4, 7, 3)) {
    const LieAlgebra limit = limit_law(scale_law(make_g_m(m), solve_exponents(m, q, 1, 1)));
    t.expect(tensor_equal(limit, make_g_m_q(m, q)), name(m, q));
  }
  return t.outcome("limit of g_m under the solved scaling equals g_m(q), m=4..7, k<=3");
}

Outcome redundancy() {
  Tally t;
  for (const auto& [m, q] : grid(4, 7, 3)) t.expect(check_redundancy(m, q), name(m, q));
  return t.outcome("pairing equations implied by the chain equations, symbolic in (N1, N2)");
}

Outcome heisenberg_degeneration() {
  Tally t;
  for (std::size_t m = 4; m <= 6; ++m) {
    const auto c = contract_to_heisenberg(m);
    t.expect(tensor_equal(c.limit, make_heisenberg_plus_abelian(m)), "limit m=" + std::to_string(m));
    t.expect(derived_algebra(c.limit).dim() == 1, "derived dim m=" + std::to_string(m));
    t.expect(center(c.limit).dim() == 3, "center dim m=" + std::to_string(m));
  }
  return t.outcome("g_m -> h_{m-1}+C^2 with dim [h,h]=1 and dim Z=3, m=4..6");
}

Outcome gm_invariants() {
  Tally t;
  for (std::size_t m = 4; m <= 7; ++m) {
    const LieAlgebra g = make_g_m(m);
    const std::string s = "m=" + std::to_string(m);
    t.expect(characteristic_sequence(g).blocks == std::vector<std::size_t>{2 * m - 1, 1, 1},
             s + " char seq");
    t.expect(nilindex(g) == 2 * m - 1, s + " nilindex");
    t.expect(betti1(g) == 2, s + " b1");
    t.expect(center(g).dim() == 2, s + " center");
    t.expect(diagonal_rank(g) == 2, s + " rank");
  }
  return t.outcome("g_m: c=(2m-1,1,1), nilindex 2m-1, b1=2, dim Z=2, rank 2, m=4..7");
}

Outcome centralizer_condition() {
  Tally t;
  for (std::size_t m = 4; m <= 7; ++m) {
    const auto d = centralizer_dichotomy(make_g_m(m), m, SeriesIndexing::kOneBased);
    t.expect(d.upper_inside_centralizer, "C^m abelian, m=" + std::to_string(m));
    t.expect(!d.lower_inside_centralizer, "C^{m-1} nonabelian, m=" + std::to_string(m));
  }
  return t.outcome("C^m inside its centralizer, C^{m-1} not (C^1 = g), m=4..7");
}

Outcome rank_bounds() {
  Tally t;
  for (const auto& [m, q] : grid(4, 7, 3)) {
    const LieAlgebra g = make_g_m_q(m, q);
    const std::size_t r = diagonal_rank(g);
    t.expect(r > 2 && r <= m + 1, name(m, q) + " rank " + std::to_string(r));
    const bool maximal = q.size() == 1 && q.front() == static_cast<int>(m) + 1;
    t.expect((r == betti1(g)) == maximal, name(m, q) + " maximal-rank iff");
  }
  const LieAlgebra g45 = make_g_m_q(4, {5});
  t.expect(diagonal_rank(g45) == 3 && betti1(g45) == 3, "rank(g_4(5)) = b1 = 3");
  return t.outcome("2 < rank <= m+1; rank = b1 iff q=(m+1), m=4..7, k<=3");
}

Outcome completeness_of_r() {
  Tally t;
  std::vector<std::pair<std::size_t, std::vector<int>>> cases;
  for (std::size_t m : {4, 5}) {
    cases.emplace_back(m, std::vector<int>{});
    for (auto& q : enumerate_q_lists(m, 2)) cases.emplace_back(m, std::move(q));
  }
  cases.emplace_back(6, std::vector<int>{});
  for (auto& q : enumerate_q_lists(6, 1)) cases.emplace_back(6, std::move(q));
  double slowest = 0;
  for (const auto& [m, q] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto cert = certify_r_m(m, q);
    slowest = std::max(slowest,
                       std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    t.expect(cert.center_dim == 0, "r for " + name(m, q) + " center");
    t.expect(cert.der_dim == cert.algebra_dim, "r for " + name(m, q) + " dim Der");
    t.expect(cert.solvable, "r for " + name(m, q) + " solvable");
  }
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << "t+g_m(q) centerless, dim Der = dim r, solvable, " << cases.size()
     << " instances, slowest " << slowest << " s";
  return t.outcome(os.str());
}

Outcome necessary_conditions_monotone() {
  Tally t;
  auto check_pair = [&](const LieAlgebra& mu, const LieAlgebra& lambda, const std::string& label) {
    const auto r = necessary_conditions(mu, lambda);
    t.expect(r.all_hold(), label + " conditions");
    if (!tensor_equal(mu, lambda)) t.expect(r.derivations() == Verdict::kHolds, label + " Der strict");
  };
  for (const auto& [m, q] : grid(4, 7, 3)) {
    const LieAlgebra limit = limit_law(scale_law(make_g_m(m), solve_exponents(m, q)));
    check_pair(make_g_m(m), limit, name(m, {}) + "->" + name(m, q));
  }
  for (std::size_t m = 4; m <= 6; ++m) {
    check_pair(make_g_m(m), contract_to_heisenberg(m).limit, name(m, {}) + "->h+C^2");
  }
  return t.outcome("Der, derived, center and rank conditions hold on every contraction pair");
}

Outcome nonsplit() {
  Tally t;
  for (const auto& [m, q] : grid(4, 7, 3)) {
    const LieAlgebra g = make_g_m_q(m, q);
    t.expect(!has_abelian_direct_factor(g), name(m, q) + " splits");
    t.expect(!characteristic_sequence(g).is_linear(), name(m, q) + " linear char seq");
  }
  return t.outcome("g_m(q) has no abelian direct factor and a nonlinear char seq, m=4..7, k<=3");
}

Outcome oracle_equivalence() {
  Tally t;
  std::vector<std::pair<std::string, LieAlgebra>> cases;
  for (std::size_t m = 4; m <= 5; ++m) {
    cases.emplace_back(name(m, {}), make_g_m(m));
    for (const auto& q : enumerate_q_lists(m, 3)) cases.emplace_back(name(m, q), make_g_m_q(m, q));
    cases.emplace_back("h+C^2 m=" + std::to_string(m), make_heisenberg_plus_abelian(m));
  }
  for (std::size_t n = 3; n <= 12; ++n) cases.emplace_back("L_" + std::to_string(n), make_model_filiform(n));
  cases.emplace_back("t+g_4", build_r_m(4, {}));
  for (const auto& q : enumerate_q_lists(4, 1)) cases.emplace_back("t+" + name(4, q), build_r_m(4, q));
  for (const auto& [label, L] : cases) {
    if (L.dim() > 12) continue;
    t.expect(derivations(L).dim() == oracle::derivation_dim(L), label);
  }
  return t.outcome("dim Der agrees with an independent elimination on " +
                   std::to_string(cases.size()) + " algebras of dim <= 12");
}

std::string run_table(const std::string& threads) {
  setenv("LIECONTRACT_THREADS", threads.c_str(), 1);
  std::ostringstream out, err;
  const int code = cli::run({"table", "--m", "4..6", "--max-k", "2", "--format", "csv"}, out, err);
  unsetenv("LIECONTRACT_THREADS");
  return code == cli::kExitOk ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
}

Outcome round_trip_and_determinism() {
  Tally t;
  std::vector<FamilySpec> specs;
  for (std::size_t m = 4; m <= 8; ++m) {
    specs.push_back({Family::kGm, m, {}});
    specs.push_back({Family::kHeisenbergPlusAbelian, m, {}});
    for (auto& q : enumerate_q_lists(m, 3)) specs.push_back({Family::kGmQ, m, std::move(q)});
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    specs.push_back({Family::kModelFiliform, n, {}});
    specs.push_back({Family::kAbelian, n, {}});
  }
  for (const auto& spec : specs) {
    const LieAlgebra L = make_family(spec);
    const std::string text = emit_algebra(L, spec);
    const AlgebraDocument doc = parse_algebra(text);
    t.expect(doc.algebra == L && doc.family == spec && emit_algebra(doc.algebra, doc.family) == text,
             spec.display_name());
  }
  const std::string first = run_table("1");
  t.expect(first.rfind("m,q_list", 0) == 0, "table output: " + first.substr(0, 40));
  t.expect(run_table("1") == first, "table rerun, 1 thread");
  t.expect(run_table("4") == first, "table rerun, 4 threads");
  t.expect(run_table("3") == first, "table rerun, 3 threads");
  return t.outcome("JSON emit/parse identity on " + std::to_string(specs.size()) +
                   " algebras; table byte-identical across runs and thread counts");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"family soundness", family_soundness},
      {"contraction limits", contraction_limits},
      {"redundant pairing equations", redundancy},
      {"heisenberg degeneration", heisenberg_degeneration},
      {"invariants of g_m", gm_invariants},
      {"centralizer dichotomy", centralizer_condition},
      {"rank bounds", rank_bounds},
      {"completeness of t+g_m(q)", completeness_of_r},
      {"necessary conditions", necessary_conditions_monotone},
      {"nonsplit and nonlinear", nonsplit},
      {"oracle equivalence", oracle_equivalence},
      {"round trip and determinism", round_trip_and_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first
         << ": " << o.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
