#include "melon/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "melon/concavity.hpp"
#include "melon/graph.hpp"

namespace melon::cli {
namespace {

using families::FamilyTag;

// Errors that map to a specific exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr FamilyTag kAllFamilies[] = {FamilyTag::F, FamilyTag::G, FamilyTag::H, FamilyTag::B};

std::string json_int_list(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + "]";
}

std::string json_int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string degree_list(const std::vector<int>& v) {
  if (v.empty()) return "None";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

const char* py_bool(bool b) { return b ? "True" : "False"; }
const char* json_bool(bool b) { return b ? "true" : "false"; }

Basis basis_flag(const std::string& s) {
  try {
    return parse_basis(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

graph::CountBudget budget_from(const std::optional<std::uint64_t>& flag) {
  graph::CountBudget b;
  try {
    b = graph::CountBudget::from_env();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (flag) {
    if (*flag == 0) throw UsageError("--budget must be positive");
    b.max_points = *flag;
  }
  return b;
}

std::vector<std::uint64_t> primes_flag(const std::string& text) {
  try {
    return parse_prime_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

IntPoly parse_coefficient_list(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char ch) { return ch == ' ' || ch == '\t'; }),
             body.end());
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw UsageError("coefficient list must look like [a0, a1, ...]");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<BigInt> coeffs;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt c;
    if (item.empty() || c.set_str(item, 10) != 0) throw UsageError("bad coefficient '" + item + "'");
    coeffs.push_back(c);
  }
  return IntPoly(std::move(coeffs));
}

void print_verification_md(std::ostream& out, const graph::VerificationReport& rep) {
  for (const auto& c : rep.checks) {
    out << "q = " << c.q << ": count " << c.count << ", class " << c.expected << ", "
        << (c.match ? "match" : "MISMATCH") << '\n';
  }
}

std::string verification_json(const graph::VerificationReport& rep) {
  std::string s = "[";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    if (i) s += ',';
    s += "{\"q\":" + std::to_string(c.q) + ",\"count\":" + std::to_string(c.count) +
         ",\"expected\":" + c.expected.get_str() + ",\"match\":" + json_bool(c.match) + "}";
  }
  return s + "]";
}

void print_analysis_md(std::ostream& out, const concavity::ConcavityReport& r) {
  out << "degree: " << r.degree << '\n'
      << "LC: " << py_bool(r.lc) << " (fails at " << degree_list(r.lc_failures) << ")\n"
      << "ULC: " << py_bool(r.ulc) << " (fails at " << degree_list(r.ulc_failures) << ")\n"
      << "unimodal: " << py_bool(r.unimodal) << '\n'
      << "internal zeros: " << py_bool(r.internal_zeros) << '\n'
      << "all positive: " << py_bool(r.all_positive) << '\n';
}

std::string analysis_json(const concavity::ConcavityReport& r) {
  return "{\"degree\":" + std::to_string(r.degree) + ",\"lc\":" + json_bool(r.lc) +
         ",\"lc_failures\":" + json_int_list(r.lc_failures) + ",\"ulc\":" + json_bool(r.ulc) +
         ",\"ulc_failures\":" + json_int_list(r.ulc_failures) + ",\"unimodal\":" + json_bool(r.unimodal) +
         ",\"internal_zeros\":" + json_bool(r.internal_zeros) + ",\"all_positive\":" + json_bool(r.all_positive) +
         "}";
}

// Shared tail of `class` and `necklace`: print the class, optionally analyse
// and verify it against point counts of g.
int emit_class(std::ostream& out, const ClassPoly& cls, Basis basis, const std::string& format, bool analyze,
               const graph::Multigraph* g, const std::vector<std::uint64_t>& primes,
               const graph::CountBudget& budget, std::optional<bool> recursion_match = std::nullopt) {
  const IntPoly shown = to_basis(cls, basis).poly;
  std::optional<graph::VerificationReport> rep;
  if (g != nullptr && !primes.empty()) rep = graph::verify_class(*g, cls, primes, budget);
  std::optional<concavity::ConcavityReport> analysis;
  if (analyze) analysis = concavity::analyze(cls);

  if (format == "json") {
    out << "{\"basis\":\"" << basis_name(basis) << "\",\"coefficients\":" << json_int_list(shown.coeffs());
    if (recursion_match) out << ",\"recursion_match\":" << json_bool(*recursion_match);
    if (rep) out << ",\"verification\":" << verification_json(*rep);
    if (analysis) out << ",\"analysis\":" << analysis_json(*analysis);
    out << "}\n";
  } else {
    out << format_coefficients(shown) << '\n';
    if (recursion_match) out << "recursion: " << (*recursion_match ? "match" : "MISMATCH") << '\n';
    if (rep) print_verification_md(out, *rep);
    if (analysis) print_analysis_md(out, *analysis);
  }
  const bool ok = (!rep || rep->all_match()) && recursion_match.value_or(true);
  return ok ? kOk : kMismatch;
}

melonic::MelonicConstruction load_construction(const std::string& path) {
  melonic::MelonicConstruction c;
  try {
    c = melonic::construction_from_json(read_input(path));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto violations = melonic::validate(c);
  if (!violations.empty()) {
    std::string msg = "invalid construction:";
    for (const auto& v : violations) {
      msg += "\n  stage " + std::to_string(v.stage) + ": condition (" + std::to_string(v.condition) +
             "): " + v.message;
    }
    throw InputError(msg);
  }
  return c;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int m = std::stoi(text);
      return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range must look like LO..HI, got '" + text + "'");
  }
}

}  // namespace

std::string format_coefficients(const IntPoly& p, bool zero_as_list) {
  if (p.is_zero()) return zero_as_list ? "[0]" : "[]";
  return p.to_string();
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long q = 0;
    try {
      q = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad prime '" + item + "'");
    }
    if (used != item.size() || item.empty() || item[0] == '-') throw std::invalid_argument("bad prime '" + item + "'");
    if (!graph::is_prime(q)) throw std::invalid_argument(item + " is not prime");
    primes.push_back(q);
  }
  if (primes.empty()) throw std::invalid_argument("empty prime list");
  return primes;
}

std::vector<TableRow> table_rows(FamilyTag family, int m_lo, int m_hi, bool order_m) {
  std::vector<TableRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    TableRow row;
    row.m = m;
    row.coefficients = families::family_poly(family, m).poly;
    const auto& a = row.coefficients.coeffs();
    auto verdict = order_m ? concavity::check_ulc_order(a, m) : concavity::check_ulc(a);
    row.verdict = verdict.holds;
    row.failing_degrees = std::move(verdict.failing_degrees);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_markdown_table(const std::vector<TableRow>& rows, bool order_m) {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"m", "Coefficients", order_m ? "ULC(m)" : "ULC",
                   order_m ? "Degrees that fail ULC(m)" : "Degrees that fail ULC"});
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.m), format_coefficients(r.coefficients, true), py_bool(r.verdict),
                     degree_list(r.failing_degrees)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
  }

  std::string out;
  auto emit = [&](const std::array<std::string, 4>& row) {
    out += '|';
    for (std::size_t i = 0; i < 4; ++i) out += ' ' + row[i] + std::string(width[i] - row[i].size(), ' ') + " |";
    out += '\n';
  };
  emit(cells[0]);
  out += '|';
  for (std::size_t i = 0; i < 4; ++i) out += std::string(width[i] + 2, '-') + '|';
  out += '\n';
  for (std::size_t i = 1; i < cells.size(); ++i) emit(cells[i]);
  return out;
}

SearchResult run_search(int max_edges, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const auto all = melonic::enumerate_constructions(max_edges);
  std::vector<std::vector<int>> failures(all.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    melonic::ClassCalculator calc;
    for (std::size_t i = next++; i < all.size(); i = next++) {
      failures[i] = concavity::check_lc(calc.class_of(all[i]).poly.coeffs()).failing_degrees;
    }
  };
  workers = std::max(1U, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SearchResult r;
  r.edge_bound = max_edges;
  r.constructions_checked = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!failures[i].empty()) r.counterexamples.push_back({all[i], failures[i]});
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string search_to_json(const SearchResult& r, bool with_timing) {
  std::string s = "{\"edge_bound\":" + std::to_string(r.edge_bound) +
                  ",\"constructions_checked\":" + std::to_string(r.constructions_checked) + ",\"counterexamples\":[";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    if (i) s += ',';
    s += "{\"construction\":" + melonic::construction_to_json(r.counterexamples[i].construction) +
         ",\"failing_degrees\":" + json_int_list(r.counterexamples[i].failing_degrees) + "}";
  }
  s += "]";
  if (with_timing) {
    std::ostringstream t;
    t << r.elapsed_seconds;
    s += ",\"elapsed_seconds\":" + t.str();
  }
  return s + "}";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck classes of banana, melonic and necklace graphs", "melon"};
  app.require_subcommand(1);
  std::function<int()> action;

  const std::vector<std::string> formats{"md", "json"};
  const std::vector<std::string> bases{"S", "T", "L"};

  // family
  std::string family_name;
  int fam_m = 0;
  std::optional<int> fam_n;
  std::string fam_basis = "S", fam_format = "md";
  auto* family = app.add_subcommand("family", "Coefficients of f_m, g_m, h_m, b_m (or g_{m,n}, b_{m,n})");
  family->add_option("family", family_name, "f, g, h or b")->required();
  family->add_option("--m", fam_m, "Index m >= 0")->required();
  family->add_option("--n", fam_n, "Second index for g and b");
  family->add_option("--basis", fam_basis, "Output basis")->check(CLI::IsMember(bases));
  family->add_option("--format", fam_format)->check(CLI::IsMember(formats));
  family->callback([&] {
    action = [&] {
      FamilyTag tag{};
      try {
        tag = families::parse_family(family_name);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (fam_m < 0) throw UsageError("--m must be nonnegative");
      ClassPoly p;
      if (fam_n) {
        if (tag != FamilyTag::G && tag != FamilyTag::B) throw UsageError("--n applies only to g and b");
        if (fam_m < 1 || *fam_n < 1) throw UsageError("--m and --n must be positive with --n");
        p = tag == FamilyTag::G ? families::g_mn_poly(fam_m, *fam_n) : families::b_mn_poly(fam_m, *fam_n);
      } else {
        p = families::family_poly(tag, fam_m);
      }
      const Basis basis = basis_flag(fam_basis);
      const IntPoly shown = to_basis(p, basis).poly;
      if (fam_format == "json") {
        out << "{\"family\":\"" << families::family_name(tag) << "\",\"m\":" << fam_m;
        if (fam_n) out << ",\"n\":" << *fam_n;
        out << ",\"basis\":\"" << basis_name(basis) << "\",\"coefficients\":" << json_int_list(shown.coeffs())
            << "}\n";
      } else {
        out << format_coefficients(shown) << '\n';
      }
      return int{kOk};
    };
  });

  // tables
  std::string tab_range = "1..10", tab_which = "ulc", tab_format = "md";
  std::vector<std::string> tab_families;
  auto* tables = app.add_subcommand("tables", "ULC or ULC(m) tables for f, g, h, b");
  tables->add_option("--range", tab_range, "m range LO..HI");
  tables->add_option("--which", tab_which)->check(CLI::IsMember({"ulc", "ulcm"}));
  tables->add_option("--family", tab_families, "Restrict to these families (repeatable)");
  tables->add_option("--format", tab_format)->check(CLI::IsMember(formats));
  tables->callback([&] {
    action = [&] {
      const auto [lo, hi] = parse_range(tab_range);
      if (lo < 0 || hi < lo) throw UsageError("range must satisfy 0 <= LO <= HI");
      std::vector<FamilyTag> chosen;
      for (const auto& name : tab_families) {
        try {
          chosen.push_back(families::parse_family(name));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      if (chosen.empty()) chosen.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
      const bool order_m = tab_which == "ulcm";

      if (tab_format == "json") {
        out << "{\"which\":\"" << tab_which << "\",\"tables\":[";
        for (std::size_t t = 0; t < chosen.size(); ++t) {
          if (t) out << ',';
          out << "{\"family\":\"" << families::family_name(chosen[t]) << "\",\"rows\":[";
          const auto rows = table_rows(chosen[t], lo, hi, order_m);
          for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out << ',';
            out << "{\"m\":" << rows[i].m << ",\"coefficients\":" << json_int_list(rows[i].coefficients.coeffs())
                << ",\"verdict\":" << json_bool(rows[i].verdict)
                << ",\"failing_degrees\":" << json_int_list(rows[i].failing_degrees) << '}';
          }
          out << "]}";
        }
        out << "]}\n";
      } else {
        for (std::size_t t = 0; t < chosen.size(); ++t) {
          if (t) out << '\n';
          out << "## " << families::family_name(chosen[t]) << "_m, " << (order_m ? "ULC(m)" : "ULC") << ", m = " << lo
              << ".." << hi << "\n\n"
              << render_markdown_table(table_rows(chosen[t], lo, hi, order_m), order_m);
        }
      }
      return int{kOk};
    };
  });

  // class
  std::string cls_path, cls_basis = "S", cls_format = "md", cls_verify;
  std::optional<std::uint64_t> cls_budget;
  bool cls_analyze = false;
  auto* klass = app.add_subcommand("class", "Class of a melonic construction given as JSON ('-' for stdin)");
  klass->add_option("construction", cls_path, "Construction JSON file")->required();
  klass->add_option("--basis", cls_basis)->check(CLI::IsMember(bases));
  klass->add_option("--verify", cls_verify, "Comma-separated primes for point-count verification");
  klass->add_option("--budget", cls_budget, "Maximum q^|E| per point count");
  klass->add_flag("--analyze", cls_analyze, "Report concavity properties");
  klass->add_option("--format", cls_format)->check(CLI::IsMember(formats));
  klass->callback([&] {
    action = [&] {
      const Basis basis = basis_flag(cls_basis);
      const auto primes = cls_verify.empty() ? std::vector<std::uint64_t>{} : primes_flag(cls_verify);
      const auto budget = budget_from(cls_budget);
      const auto c = load_construction(cls_path);
      const auto cls = melonic::class_of(c);
      const auto g = melonic::to_graph(c);
      return emit_class(out, cls, basis, cls_format, cls_analyze, &g, primes, budget);
    };
  });

  // necklace
  std::string nk_kind, nk_basis = "S", nk_format = "md", nk_verify;
  int nk_m = 0, nk_n = 0;
  std::optional<std::uint64_t> nk_budget;
  bool nk_analyze = false;
  auto* neck = app.add_subcommand("necklace", "Closed-form class of a plain or clasped necklace");
  neck->add_option("kind", nk_kind)->required()->check(CLI::IsMember({"plain", "clasped"}));
  neck->add_option("--m", nk_m, "Banana size m >= 1")->required();
  neck->add_option("--n", nk_n, "Necklace length n >= 2")->required();
  neck->add_option("--basis", nk_basis)->check(CLI::IsMember(bases));
  neck->add_option("--verify", nk_verify, "Cross-check with the recursion and point counts at these primes");
  neck->add_option("--budget", nk_budget, "Maximum q^|E| per point count");
  neck->add_flag("--analyze", nk_analyze, "Report concavity properties");
  neck->add_option("--format", nk_format)->check(CLI::IsMember(formats));
  neck->callback([&] {
    action = [&] {
      if (nk_m < 1 || nk_n < 2) throw UsageError("necklaces need --m >= 1 and --n >= 2");
      const Basis basis = basis_flag(nk_basis);
      const bool plain = nk_kind == "plain";
      const auto cls = plain ? families::necklace_class(nk_m, nk_n) : families::clasped_necklace_class(nk_m, nk_n);
      if (nk_verify.empty()) return emit_class(out, cls, basis, nk_format, nk_analyze, nullptr, {}, {});

      const auto primes = primes_flag(nk_verify);
      const auto budget = budget_from(nk_budget);
      const auto c = plain ? melonic::necklace(nk_m, nk_n) : melonic::clasped_necklace(nk_m, nk_n);
      const bool same = melonic::class_of(c).poly == cls.poly;
      const auto g = melonic::to_graph(c);
      return emit_class(out, cls, basis, nk_format, nk_analyze, &g, primes, budget, same);
    };
  });

  // search
  int se_max_edges = 0;
  unsigned se_workers = 1;
  bool se_timing = false;
  std::string se_format = "json";
  auto* search = app.add_subcommand("search", "Check log-concavity of every reduced construction up to an edge bound");
  search->add_option("--max-edges", se_max_edges, "Edge bound >= 1")->required();
  search->add_option("--workers", se_workers, "Worker threads");
  search->add_flag("--timing", se_timing, "Include elapsed time in the output");
  search->add_option("--format", se_format)->check(CLI::IsMember(formats));
  search->callback([&] {
    action = [&] {
      if (se_max_edges < 1) throw UsageError("--max-edges must be at least 1");
      const auto r = run_search(se_max_edges, se_workers);
      if (se_format == "json") {
        out << search_to_json(r, se_timing) << '\n';
      } else {
        out << "edge bound: " << r.edge_bound << '\n'
            << "constructions checked: " << r.constructions_checked << '\n'
            << "counterexamples: " << r.counterexamples.size() << '\n';
        for (const auto& ce : r.counterexamples) {
          out << "  " << melonic::to_string(ce.construction) << " fails LC at " << degree_list(ce.failing_degrees)
              << '\n';
        }
        if (se_timing) out << "elapsed: " << r.elapsed_seconds << " s\n";
      }
      return int{kOk};
    };
  });

  // oracle
  std::string or_path, or_verify = "2,3", or_expect, or_basis = "S", or_format = "md";
  std::optional<std::uint64_t> or_budget;
  auto* oracle = app.add_subcommand("oracle", "Count points of a graph hypersurface complement from an edge list");
  oracle->add_option("graph", or_path, "Edge-list file ('-' for stdin)")->required();
  oracle->add_option("--verify", or_verify, "Comma-separated primes");
  oracle->add_option("--expect", or_expect, "Class to compare against, e.g. \"[2, 3, 1]\"");
  oracle->add_option("--basis", or_basis, "Basis of --expect")->check(CLI::IsMember(bases));
  oracle->add_option("--budget", or_budget, "Maximum q^|E| per point count");
  oracle->add_option("--format", or_format)->check(CLI::IsMember(formats));
  oracle->callback([&] {
    action = [&] {
      const auto primes = primes_flag(or_verify);
      const auto budget = budget_from(or_budget);
      std::optional<ClassPoly> expect;
      if (!or_expect.empty()) expect = ClassPoly{parse_coefficient_list(or_expect), basis_flag(or_basis)};
      graph::Multigraph g;
      try {
        std::istringstream in(read_input(or_path));
        g = graph::parse_edge_list(in);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      if (!g.is_connected()) throw InputError("graph is not connected");

      if (expect) {
        const auto rep = graph::verify_class(g, *expect, primes, budget);
        if (or_format == "json") {
          out << "{\"edges\":" << g.num_edges() << ",\"verification\":" << verification_json(rep) << "}\n";
        } else {
          print_verification_md(out, rep);
        }
        return rep.all_match() ? int{kOk} : int{kMismatch};
      }
      std::vector<std::uint64_t> counts;
      for (auto q : primes) counts.push_back(graph::count_complement_points(g, q, budget));
      if (or_format == "json") {
        out << "{\"edges\":" << g.num_edges() << ",\"counts\":[";
        for (std::size_t i = 0; i < primes.size(); ++i) {
          out << (i ? "," : "") << "{\"q\":" << primes[i] << ",\"count\":" << counts[i] << '}';
        }
        out << "]}\n";
      } else {
        for (std::size_t i = 0; i < primes.size(); ++i) out << "q = " << primes[i] << ": " << counts[i] << '\n';
      }
      return int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const graph::BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const graph::NonPrimeModulus& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace melon::cli
