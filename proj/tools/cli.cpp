#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "liecontract/liecontract.hpp"

namespace liecontract::cli {

namespace {

/// Bad flag values: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::size_t>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

FamilySpec family_spec_from_flags(const std::string& family, std::size_t m, std::size_t n,
                                  const std::string& q_text) {
  FamilySpec spec;
  try {
    spec.family = parse_family(family);
    spec.q = parse_int_list(q_text);
    const bool uses_n = spec.family == Family::kModelFiliform || spec.family == Family::kAbelian;
    spec.size = uses_n ? n : m;
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::vector<int> validated_q(std::size_t m, const std::string& q_text, bool allow_empty) {
  try {
    std::vector<int> q = parse_int_list(q_text);
    if (m < 4) throw std::invalid_argument("m must satisfy m ≥ 4");
    if (q.empty() && !allow_empty) throw std::invalid_argument("--q is required");
    validate_q_list(m, q);
    return q;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

LieAlgebra g_m_or_q(std::size_t m, const std::vector<int>& q) {
  return q.empty() ? make_g_m(m) : make_g_m_q(m, q);
}

std::string g_name(std::size_t m, const std::vector<int>& q) {
  return q.empty() ? FamilySpec{Family::kGm, m, {}}.display_name()
                   : FamilySpec{Family::kGmQ, m, q}.display_name();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---- invariants -------------------------------------------------------------

struct InvariantSummary {
  std::size_t dim = 0;
  std::optional<std::size_t> nilindex;
  std::vector<std::size_t> lcs_dims;
  std::size_t center_dim = 0;
  std::size_t b1 = 0;
  std::size_t der_dim = 0;
  std::optional<CharacteristicSequence> char_seq;
  std::size_t rank = 0;
};

InvariantSummary summarize(const LieAlgebra& L) {
  InvariantSummary s;
  s.dim = L.dim();
  const auto lcs = lower_central_series(L);
  s.nilindex = lcs.nilindex;
  s.lcs_dims = lcs.dims;
  s.center_dim = center(L).dim();
  s.b1 = betti1(L);
  s.der_dim = derivations(L).dim();
  if (s.nilindex) s.char_seq = characteristic_sequence(L);
  s.rank = diagonal_rank(L);
  return s;
}

std::string invariants_text(const InvariantSummary& s, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "algebra: " << name << "\n";
  os << "dim: " << s.dim << "\n";
  os << "nilindex: " << (s.nilindex ? std::to_string(*s.nilindex) : "not nilpotent") << "\n";
  os << "lcs_dims: " << join(s.lcs_dims, ",") << "\n";
  os << "center_dim: " << s.center_dim << "\n";
  os << "b1: " << s.b1 << "\n";
  os << "der_dim: " << s.der_dim << "\n";
  os << "characteristic_sequence: " << (s.char_seq ? s.char_seq->str() : "n/a") << "\n";
  os << "diagonal_rank: " << s.rank << "\n";
  return os.str();
}

OrderedJson invariants_json(const InvariantSummary& s, const std::string& name) {
  OrderedJson j;
  if (!name.empty()) j["algebra"] = name;
  j["dim"] = s.dim;
  j["nilindex"] = s.nilindex ? OrderedJson(*s.nilindex) : OrderedJson(nullptr);
  j["lcs_dims"] = s.lcs_dims;
  j["center_dim"] = s.center_dim;
  j["b1"] = s.b1;
  j["der_dim"] = s.der_dim;
  j["characteristic_sequence"] =
      s.char_seq ? OrderedJson(s.char_seq->blocks) : OrderedJson(nullptr);
  j["diagonal_rank"] = s.rank;
  return j;
}

// ---- contract ---------------------------------------------------------------

std::string parametric_text(const ParametricLaw& p) {
  std::ostringstream os;
  for (const auto& e : p.entries) {
    os << "  [" << p.labels[e.i] << ", " << p.labels[e.j] << "] -> " << e.c << " "
       << p.labels[e.k] << " * t^" << e.e << "\n";
  }
  return os.str();
}

std::string indent(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream os;
  for (std::string line; std::getline(in, line);) os << "  " << line << "\n";
  return os.str();
}

// ---- table ------------------------------------------------------------------

struct TableRow {
  std::size_t m = 0;
  std::vector<int> q;
  InvariantSummary inv;
  bool maximal_rank = false;
  std::optional<bool> r_complete;
};

std::pair<std::size_t, std::size_t> parse_m_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t consumed = 0;
    if (dots == std::string::npos) {
      const auto m = std::stoul(text, &consumed);
      if (consumed != text.size()) throw std::invalid_argument(text);
      return {m, m};
    }
    const auto a = std::stoul(text.substr(0, dots), &consumed);
    if (consumed != dots) throw std::invalid_argument(text);
    const std::string tail = text.substr(dots + 2);
    const auto b = std::stoul(tail, &consumed);
    if (consumed != tail.size() || b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--m expects A..B or a single integer (got '" + text + "')");
  }
}

std::string csv_table(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "m,q_list,dim,nilindex,lcs_dims,b1,center_dim,der_dim,char_seq,rank,maximal_rank,"
        "r_complete\n";
  for (const auto& r : rows) {
    os << r.m << "," << join(r.q, ";") << "," << r.inv.dim << ","
       << (r.inv.nilindex ? std::to_string(*r.inv.nilindex) : "") << ","
       << join(r.inv.lcs_dims, ";") << "," << r.inv.b1 << "," << r.inv.center_dim << ","
       << r.inv.der_dim << "," << (r.inv.char_seq ? r.inv.char_seq->str(";") : "") << ","
       << r.inv.rank << "," << (r.maximal_rank ? "true" : "false") << ","
       << (r.r_complete ? (*r.r_complete ? "true" : "false") : "") << "\n";
  }
  return os.str();
}

std::string md_table(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| m | q | dim | nilindex | LCS dims | b1 | dim Z | dim Der | char. seq. | rank | "
        "maximal rank | r_m complete |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.m << " | " << (r.q.empty() ? "-" : "(" + join(r.q, ",") + ")") << " | "
       << r.inv.dim << " | " << (r.inv.nilindex ? std::to_string(*r.inv.nilindex) : "-")
       << " | " << join(r.inv.lcs_dims, ",") << " | " << r.inv.b1 << " | "
       << r.inv.center_dim << " | " << r.inv.der_dim << " | "
       << (r.inv.char_seq ? "(" + r.inv.char_seq->str() + ")" : "-") << " | " << r.inv.rank
       << " | " << yes_no(r.maximal_rank) << " | "
       << (r.r_complete ? yes_no(*r.r_complete) : "-") << " |\n";
  }
  return os.str();
}

std::string json_table(const std::vector<TableRow>& rows) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& r : rows) {
    OrderedJson j;
    j["m"] = r.m;
    j["q_list"] = r.q;
    j["dim"] = r.inv.dim;
    j["nilindex"] = r.inv.nilindex ? OrderedJson(*r.inv.nilindex) : OrderedJson(nullptr);
    j["lcs_dims"] = r.inv.lcs_dims;
    j["b1"] = r.inv.b1;
    j["center_dim"] = r.inv.center_dim;
    j["der_dim"] = r.inv.der_dim;
    j["char_seq"] = r.inv.char_seq ? OrderedJson(r.inv.char_seq->blocks) : OrderedJson(nullptr);
    j["rank"] = r.inv.rank;
    j["maximal_rank"] = r.maximal_rank;
    j["r_complete"] = r.r_complete ? OrderedJson(*r.r_complete) : OrderedJson(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

// ---- check ------------------------------------------------------------------

class CheckReport {
 public:
  explicit CheckReport(std::ostream& out) : out_(out) {}

  void record(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    failures_ += ok ? 0 : 1;
  }
  int exit_code() const { return failures_ == 0 ? kExitOk : kExitVerificationFailed; }
  std::size_t failures() const { return failures_; }

 private:
  std::ostream& out_;
  std::size_t failures_ = 0;
};

int run_check(std::size_t m, const std::vector<int>& q, std::ostream& out) {
  CheckReport report(out);
  const std::string name = g_name(m, q);
  out << "check " << name << "\n";

  const LieAlgebra gm = make_g_m(m);
  const LieAlgebra gq = make_g_m_q(m, q);
  report.record("jacobi g_m", check_jacobi(gm).ok(), g_name(m, {}));
  report.record("jacobi g_m(q)", check_jacobi(gq).ok(), name);
  report.record("pairing equations redundant", check_redundancy(m, q), "symbolic in (N1, N2)");

  const ExponentVector a = solve_exponents(m, q);
  const LieAlgebra limit = limit_law(scale_law(gm, a));
  report.record("contraction limit", tensor_equal(limit, gq),
                "exponents " + join(a.values, ",") + "; limit " +
                    (tensor_equal(limit, gq) ? "equals " : "differs from ") + name);

  const auto heis = contract_to_heisenberg(m, q);
  const bool heis_ok = tensor_equal(heis.limit, make_heisenberg_plus_abelian(m));
  report.record("heisenberg degeneration", heis_ok,
                name + " -> " + FamilySpec{Family::kHeisenbergPlusAbelian, m, {}}.display_name());

  const auto nc = necessary_conditions(gm, gq);
  std::ostringstream nc_detail;
  nc_detail << "Der " << nc.der_mu << "->" << nc.der_lambda << " ("
            << verdict_name(nc.derivations()) << "), derived " << nc.derived_mu << "->"
            << nc.derived_lambda << " (" << verdict_name(nc.derived()) << "), center "
            << nc.center_mu << "->" << nc.center_lambda << " (" << verdict_name(nc.center())
            << "), rank " << nc.rank_mu << "->" << nc.rank_lambda << " ("
            << verdict_name(nc.rank()) << ")";
  report.record("necessary conditions", nc.all_hold() && nc.derivations() == Verdict::kHolds,
                nc_detail.str());

  const std::size_t rank = diagonal_rank(gq);
  const std::size_t b1 = betti1(gq);
  report.record("rank bounds", rank > 2 && rank <= m + 1,
                "2 < " + std::to_string(rank) + " <= " + std::to_string(m + 1));
  const bool expect_maximal = q.size() == 1 && q.front() == static_cast<int>(m) + 1;
  report.record("maximal rank", (rank == b1) == expect_maximal,
                "rank " + std::to_string(rank) + ", b1 " + std::to_string(b1) +
                    (rank == b1 ? " (maximal)" : " (not maximal)"));

  report.record("nonsplit", !has_abelian_direct_factor(gq), "center inside [g, g]");
  const auto cs = characteristic_sequence(gq);
  report.record("nonlinear characteristic sequence", !cs.is_linear(), "(" + cs.str() + ")");

  const auto cert = certify_r_m(m, q);
  report.record("r_m complete", cert.is_complete() && cert.solvable,
                "dim " + std::to_string(cert.algebra_dim) + ", center " +
                    std::to_string(cert.center_dim) + ", Der " + std::to_string(cert.der_dim) +
                    ", torus " + std::to_string(cert.torus_dim) +
                    (cert.solvable ? ", solvable" : ", not solvable"));

  out << (report.failures() == 0 ? "all checks passed" : "checks failed: " +
                                                             std::to_string(report.failures()))
      << "\n";
  return report.exit_code();
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t consumed = 0;
    int v = 0;
    try {
      v = std::stoi(item, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != item.size() || consumed == 0) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("LIECONTRACT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the nilpotent Lie algebras g_m and g_m(q), their "
               "contractions and the complete solvable algebras t + g_m(q).",
               "liecontract"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  // gen
  std::string family = "gm", q_text, output;
  std::size_t m = 0, n = 0;
  auto* gen = app.add_subcommand("gen", "Write a family member in the JSON algebra format");
  gen->add_option("--family", family, "gm | gmq | filiform | heisenberg | abelian")->required();
  gen->add_option("--m", m, "Family parameter m");
  gen->add_option("--n", n, "Dimension for filiform / abelian");
  gen->add_option("--q", q_text, "Comma-separated q list, e.g. 3,6");
  gen->add_option("-o,--output", output, "Output path (default stdout)");

  // invariants
  std::string input, format = "text";
  auto* inv = app.add_subcommand("invariants", "Print the invariants of an algebra");
  inv->add_option("file", input, "JSON algebra file");
  inv->add_option("--family", family, "gm | gmq | filiform | heisenberg | abelian");
  inv->add_option("--m", m, "Family parameter m");
  inv->add_option("--n", n, "Dimension for filiform / abelian");
  inv->add_option("--q", q_text, "Comma-separated q list");
  inv->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // contract
  bool emit_exponents = false, heisenberg = false;
  std::int64_t n1 = 1, n2 = 1;
  auto* con = app.add_subcommand("contract", "Contract g_m onto g_m(q) or onto h_{m-1} + C^2");
  con->add_option("--m", m, "Family parameter m")->required();
  con->add_option("--q", q_text, "Comma-separated q list");
  con->add_flag("--emit-exponents", emit_exponents,
                "Emit exponents, parametric law and limit as JSON");
  con->add_flag("--heisenberg", heisenberg, "Contract onto h_{m-1} + C^2");
  con->add_option("--n1", n1, "Free parameter a_2 (default 1)");
  con->add_option("--n2", n2, "Free parameter a_3 (default 1)");

  // verify-complete
  auto* ver = app.add_subcommand("verify-complete", "Completeness certificate for r_m(q)");
  ver->add_option("--m", m, "Family parameter m")->required();
  ver->add_option("--q", q_text, "Comma-separated q list (empty: t + g_m)");

  // check
  auto* chk = app.add_subcommand("check", "Run every verification for one (m, q)");
  chk->add_option("--m", m, "Family parameter m")->required();
  chk->add_option("--q", q_text, "Comma-separated q list")->required();

  // table
  std::string m_range;
  std::size_t max_k = 1;
  bool no_complete = false;
  format = "text";
  auto* tab = app.add_subcommand("table", "Sweep g_m(q) and emit one row per (m, q)");
  tab->add_option("--m", m_range, "Range A..B or a single m")->required();
  tab->add_option("--max-k", max_k, "Largest q-list length (default 1)");
  tab->add_option("--format", format, "json | csv | md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  tab->add_option("-o,--output", output, "Output path (default stdout)");
  tab->add_flag("--no-complete", no_complete, "Skip the completeness column");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const FamilySpec spec = family_spec_from_flags(family, m, n, q_text);
      write_output(output, emit_algebra(make_family(spec), spec), out);
      return kExitOk;
    }

    if (inv->parsed()) {
      LieAlgebra L;
      std::string name;
      if (!input.empty()) {
        AlgebraDocument doc;
        try {
          doc = parse_algebra(read_file(input));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        L = std::move(doc.algebra);
        if (doc.family) name = doc.family->display_name();
      } else {
        if (inv->count("--family") == 0) throw UsageError("invariants needs a file or --family");
        const FamilySpec spec = family_spec_from_flags(family, m, n, q_text);
        L = make_family(spec);
        name = spec.display_name();
      }
      const auto summary = summarize(L);
      if (format == "json") {
        out << invariants_json(summary, name).dump(2) << "\n";
      } else {
        out << invariants_text(summary, name);
      }
      return kExitOk;
    }

    if (con->parsed()) {
      const std::vector<int> q = validated_q(m, q_text, heisenberg);
      const LieAlgebra source = heisenberg ? g_m_or_q(m, q) : make_g_m(m);
      const LieAlgebra target = heisenberg ? make_heisenberg_plus_abelian(m) : make_g_m_q(m, q);
      const std::string source_name = heisenberg ? g_name(m, q) : g_name(m, {});
      const std::string target_name =
          heisenberg ? FamilySpec{Family::kHeisenbergPlusAbelian, m, {}}.display_name()
                     : g_name(m, q);
      const ExponentVector a =
          heisenberg ? contract_to_heisenberg(m, q).exponents : solve_exponents(m, q, n1, n2);
      const ParametricLaw p = scale_law(source, a);
      const LieAlgebra limit = limit_law(p);
      const bool equal = tensor_equal(limit, target);
      if (emit_exponents) {
        OrderedJson j;
        j["source"] = source_name;
        j["target"] = target_name;
        j["exponents"] = exponents_to_json(a);
        j["parametric_law"] = parametric_law_to_json(p);
        j["limit"] = algebra_to_json(limit);
        j["limit_equals_target"] = equal;
        out << j.dump(2) << "\n";
      } else {
        out << "source: " << source_name << "\n"
            << "target: " << target_name << "\n"
            << "exponents: " << join(a.values, ",") << "\n"
            << "parametric law (t -> infinity):\n"
            << parametric_text(p) << "limit:\n"
            << indent(format_bracket_table(limit))
            << "limit equals target: " << yes_no(equal) << "\n";
      }
      if (!equal) err << "limit differs from " << target_name << "\n";
      return equal ? kExitOk : kExitVerificationFailed;
    }

    if (ver->parsed()) {
      const std::vector<int> q = validated_q(m, q_text, true);
      const auto cert = certify_r_m(m, q);
      OrderedJson j;
      j["algebra"] = "r_" + std::to_string(m) + (q.empty() ? "" : "(" + join(q, ",") + ")");
      const OrderedJson body = certificate_to_json(cert);
      for (const auto& [key, value] : body.items()) j[key] = value;
      out << j.dump(2) << "\n";
      if (!cert.is_complete()) err << "r_m is not complete\n";
      return cert.is_complete() ? kExitOk : kExitVerificationFailed;
    }

    if (chk->parsed()) {
      const std::vector<int> q = validated_q(m, q_text, false);
      return run_check(m, q, out);
    }

    if (tab->parsed()) {
      const auto [m_lo, m_hi] = parse_m_range(m_range);
      if (m_lo < 4) throw UsageError("--m must satisfy m ≥ 4");
      if (format == "text") format = "md";
      std::vector<TableRow> rows;
      for (std::size_t mm = m_lo; mm <= m_hi; ++mm) {
        rows.push_back({mm, {}, {}, false, std::nullopt});
        for (auto& q : enumerate_q_lists(mm, max_k)) {
          rows.push_back({mm, std::move(q), {}, false, std::nullopt});
        }
      }
      parallel_for(rows.size(), thread_budget(), [&](std::size_t i) {
        TableRow& r = rows[i];
        r.inv = summarize(g_m_or_q(r.m, r.q));
        r.maximal_rank = r.inv.rank == r.inv.b1;
        if (!no_complete) r.r_complete = certify_r_m(r.m, r.q).is_complete();
      });
      const std::string text =
          format == "json" ? json_table(rows) : (format == "csv" ? csv_table(rows) : md_table(rows));
      write_output(output, text, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace liecontract::cli
