#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "melon/families.hpp"
#include "melon/melonic.hpp"
#include "melon/poly.hpp"

namespace melon::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // oracle or cross-check disagreement
  kUsage = 2,         // bad flags or arguments
  kInvalidInput = 3,  // malformed or invalid construction / graph input
  kBudget = 4,        // point-count budget exceeded
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "[a0, a1, ...]"; the zero polynomial is "[]" or, with zero_as_list, "[0]".
std::string format_coefficients(const IntPoly& p, bool zero_as_list = false);

/// Parses "2,3,5" into primes; throws std::invalid_argument on junk.
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

struct TableRow {
  int m = 0;
  IntPoly coefficients;
  bool verdict = true;
  std::vector<int> failing_degrees;
};

/// Rows of the ULC table (order_m = false) or the ULC(m) table for one family.
std::vector<TableRow> table_rows(families::FamilyTag family, int m_lo, int m_hi, bool order_m);

/// Aligned Markdown table with the columns m | Coefficients | verdict | failures.
std::string render_markdown_table(const std::vector<TableRow>& rows, bool order_m);

struct Counterexample {
  melonic::MelonicConstruction construction;
  std::vector<int> failing_degrees;
};

struct SearchResult {
  std::size_t constructions_checked = 0;
  int edge_bound = 0;
  std::vector<Counterexample> counterexamples;  // in canonical order
  double elapsed_seconds = 0;
};

/// Checks log-concavity of the class of every reduced construction with at
/// most max_edges edges. Output is independent of the worker count.
SearchResult run_search(int max_edges, unsigned workers);

std::string search_to_json(const SearchResult& r, bool with_timing);

}  // namespace melon::cli
