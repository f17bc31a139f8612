#include "melon/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>

namespace melon::graph {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

int count_components(int num_vertices, const std::vector<Edge>& edges) {
  DisjointSets ds(num_vertices);
  int components = num_vertices;
  for (const auto& e : edges) {
    if (ds.unite(e.u, e.v)) --components;
  }
  return components;
}

// Deletion-contraction over edges in index order. `forest` is the partial tree
// (as a union-find) and `chosen` its edge set; edge i may be skipped only when
// the edges still available keep the graph connected, i.e. it is no bridge.
class TreeSearch {
 public:
  explicit TreeSearch(const Multigraph& g) : g_(g) {}

  std::vector<EdgeSet> run() {
    trees_.clear();
    if (g_.num_vertices() <= 1) {
      trees_.push_back(0);
      return trees_;
    }
    visit(0, DisjointSets(g_.num_vertices()), 0, 0);
    return trees_;
  }

 private:
  bool completable(DisjointSets forest, int from) const {
    int components = 0;
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (forest.find(v) == v) ++components;
    }
    for (int i = from; i < g_.num_edges() && components > 1; ++i) {
      const auto& e = g_.edge(i);
      if (forest.unite(e.u, e.v)) --components;
    }
    return components == 1;
  }

  void visit(int i, const DisjointSets& forest, EdgeSet chosen, int size) {
    if (size == g_.num_vertices() - 1) {
      trees_.push_back(chosen);
      return;
    }
    if (i == g_.num_edges()) return;
    const auto& e = g_.edge(i);
    DisjointSets with = forest;
    if (with.find(e.u) != with.find(e.v)) {
      with.unite(e.u, e.v);
      visit(i + 1, with, chosen | (EdgeSet{1} << i), size + 1);
    }
    if (completable(forest, i + 1)) visit(i + 1, forest, chosen, size);
  }

  const Multigraph& g_;
  std::vector<EdgeSet> trees_;
};

__extension__ using U128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<U128>(a) * b) % q);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, q);
    a = mul_mod(a, a, q);
    e >>= 1U;
  }
  return r;
}

// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) return UINT64_MAX;
    r *= q;
  }
  return r;
}

// Counts non-zeros of a multilinear polynomial over F_q^j given as its dense
// coefficient table (index bit i = variable i present). The last variable is
// split off and each of its q values substituted; residual tables are
// memoised up to a nonzero scalar, which does not change the zero set.
class ComplementCounter {
 public:
  ComplementCounter(std::uint64_t q, int num_vars)
      : q_(q), memo_(static_cast<std::size_t>(num_vars) + 1) {}

  std::uint64_t count(std::vector<std::uint32_t> table, int vars) {
    const auto first = std::find_if(table.begin(), table.end(), [](auto c) { return c != 0; });
    if (first == table.end()) return 0;
    if (vars == 0) return 1;
    if (first == table.begin() &&
        std::all_of(table.begin() + 1, table.end(), [](auto c) { return c == 0; })) {
      return saturating_pow(q_, vars);
    }

    const std::uint64_t inv = pow_mod(*first, q_ - 2, q_);
    for (auto& c : table) c = static_cast<std::uint32_t>(mul_mod(c, inv, q_));

    std::string key(reinterpret_cast<const char*>(table.data()), table.size() * sizeof(std::uint32_t));
    auto& level = memo_[static_cast<std::size_t>(vars)];
    if (auto it = level.find(key); it != level.end()) return it->second;

    const std::size_t half = table.size() / 2;
    const bool top_absent = std::all_of(table.begin() + static_cast<std::ptrdiff_t>(half), table.end(),
                                        [](auto c) { return c == 0; });
    std::uint64_t total = 0;
    if (top_absent) {
      total = q_ * count(std::vector<std::uint32_t>(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(half)),
                         vars - 1);
    } else {
      std::vector<std::uint32_t> residual(half);
      for (std::uint64_t x = 0; x < q_; ++x) {
        for (std::size_t i = 0; i < half; ++i) {
          residual[i] = static_cast<std::uint32_t>((table[i] + mul_mod(x, table[half + i], q_)) % q_);
        }
        total += count(residual, vars - 1);
      }
    }
    level.emplace(std::move(key), total);
    return total;
  }

 private:
  std::uint64_t q_;
  std::vector<std::unordered_map<std::string, std::uint64_t>> memo_;
};

// Largest edge count for which the dense 2^|E| coefficient table is built.
constexpr int kMaxCountingEdges = 28;

}  // namespace

Multigraph::Multigraph(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
}

Multigraph::Multigraph(int num_vertices, std::vector<Edge> edges) : Multigraph(num_vertices) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

int Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (num_edges() >= kMaxEdges) throw std::length_error("too many edges for EdgeSet");
  edges_.push_back({u, v});
  return num_edges() - 1;
}

bool Multigraph::is_connected() const {
  return num_vertices_ <= 1 || count_components(num_vertices_, edges_) == 1;
}

int Multigraph::loop_number() const {
  return num_edges() - num_vertices_ + count_components(num_vertices_, edges_);
}

Multigraph Multigraph::delete_edge(int i) const {
  Multigraph g(num_vertices_);
  for (int j = 0; j < num_edges(); ++j) {
    if (j != i) g.edges_.push_back(edges_[static_cast<std::size_t>(j)]);
  }
  return g;
}

Multigraph Multigraph::contract_edge(int i) const {
  const Edge& c = edge(i);
  if (c.is_loop()) return delete_edge(i);
  const int keep = std::min(c.u, c.v);
  const int gone = std::max(c.u, c.v);
  const int last = num_vertices_ - 1;
  auto relabel = [&](int x) {
    if (x == gone) x = keep;
    if (x == last) x = gone;
    return x;
  };
  Multigraph g(num_vertices_ - 1);
  for (int j = 0; j < num_edges(); ++j) {
    if (j == i) continue;
    const Edge& e = edges_[static_cast<std::size_t>(j)];
    g.edges_.push_back({relabel(e.u), relabel(e.v)});
  }
  return g;
}

Multigraph Multigraph::banana(int n) {
  Multigraph g(2);
  for (int i = 0; i < n; ++i) g.add_edge(0, 1);
  return g;
}

std::vector<EdgeSet> spanning_trees(const Multigraph& g) {
  if (!g.is_connected()) throw DisconnectedGraph();
  return TreeSearch(g).run();
}

std::uint64_t KirchhoffPoly::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t q) const {
  std::uint64_t sum = 0;
  for (EdgeSet mono : monomials) {
    std::uint64_t term = 1 % q;
    for (EdgeSet rest = mono; rest != 0 && term != 0; rest &= rest - 1) {
      term = mul_mod(term, point[static_cast<std::size_t>(__builtin_ctzll(rest))] % q, q);
    }
    sum = (sum + term) % q;
  }
  return sum;
}

KirchhoffPoly kirchhoff_polynomial(const Multigraph& g) {
  KirchhoffPoly psi;
  psi.num_edges = g.num_edges();
  psi.degree = g.num_edges() - g.num_vertices() + 1;
  const EdgeSet all = g.num_edges() == 64 ? ~EdgeSet{0} : ((EdgeSet{1} << g.num_edges()) - 1);
  for (EdgeSet tree : spanning_trees(g)) psi.monomials.push_back(all & ~tree);
  std::sort(psi.monomials.begin(), psi.monomials.end());
  return psi;
}

CountBudget CountBudget::from_env() {
  CountBudget b;
  if (const char* env = std::getenv("MELON_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) {
      throw std::invalid_argument(std::string("MELON_BUDGET must be a positive integer, got '") + env + "'");
    }
    b.max_points = v;
  }
  return b;
}

bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t count_complement_points(const Multigraph& g, std::uint64_t q, const CountBudget& budget) {
  if (!is_prime(q)) throw NonPrimeModulus("modulus " + std::to_string(q) + " is not prime");
  if (q > UINT32_MAX) throw NonPrimeModulus("modulus too large for counting");
  const int n = g.num_edges();
  const std::uint64_t points = saturating_pow(q, n);
  if (points > budget.max_points || n > kMaxCountingEdges) {
    throw BudgetExceeded("point count needs " + std::to_string(q) + "^" + std::to_string(n) +
                         " evaluations, budget is " + std::to_string(budget.max_points));
  }
  const KirchhoffPoly psi = kirchhoff_polynomial(g);
  std::vector<std::uint32_t> table(std::size_t{1} << n, 0);
  for (EdgeSet mono : psi.monomials) table[mono] = static_cast<std::uint32_t>((table[mono] + 1) % q);
  return ComplementCounter(q, n).count(std::move(table), n);
}

bool VerificationReport::all_match() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const PrimeCheck& c) { return c.match; });
}

VerificationReport verify_class(const Multigraph& g, const ClassPoly& c,
                                const std::vector<std::uint64_t>& primes, const CountBudget& budget) {
  const IntPoly in_s = to_basis(c, Basis::S).poly;
  VerificationReport report;
  for (std::uint64_t q : primes) {
    PrimeCheck check;
    check.q = q;
    check.count = count_complement_points(g, q, budget);
    check.expected = eval_int(in_s, BigInt(static_cast<unsigned long>(q)) - 2);
    check.match = check.expected == BigInt(static_cast<unsigned long>(check.count));
    report.checks.push_back(std::move(check));
  }
  return report;
}

Multigraph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(u, v)));
  }
  if (edges.empty()) throw std::invalid_argument("edge list is empty");
  return Multigraph(max_vertex + 1, std::move(edges));
}

std::string to_edge_list(const Multigraph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace melon::graph
