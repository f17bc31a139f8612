#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "melon/poly.hpp"

// Ground-truth side of the toolkit: explicit Kirchhoff-Symanzik polynomials
// and exhaustive point counts of graph hypersurface complements over F_q.
namespace melon::graph {

struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph. Parallel edges and loops are allowed; the position
/// of an edge in edges() is its index and fixes the variable order t_1..t_n.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices);
  Multigraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// Returns the index of the new edge.
  int add_edge(int u, int v);
  int add_vertex() { return num_vertices_++; }

  bool is_connected() const;
  /// First Betti number |E| - |V| + #components.
  int loop_number() const;

  /// Graph with edge i removed; later edges shift down by one.
  Multigraph delete_edge(int i) const;
  /// Graph with edge i contracted; its endpoints merge into the lower-numbered
  /// one and the highest vertex is renumbered into the freed slot.
  Multigraph contract_edge(int i) const;

  /// Two-vertex graph with n parallel edges.
  static Multigraph banana(int n);

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph() : std::runtime_error("graph is not connected") {}
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of edge indices as a bitmask (bit i = edge i). Graphs handled here
/// have at most 64 edges.
using EdgeSet = std::uint64_t;

constexpr int kMaxEdges = 64;

/// All spanning trees, each as the set of its |V|-1 edges, in the order of a
/// deletion-contraction search over the edges. Throws DisconnectedGraph.
std::vector<EdgeSet> spanning_trees(const Multigraph& g);

/// Psi_G = sum over spanning trees T of prod_{e not in T} t_e. Each monomial is
/// the complement E \ T of a tree, so the monomials form a set.
struct KirchhoffPoly {
  int num_edges = 0;
  int degree = 0;  // loop number of the graph
  std::vector<EdgeSet> monomials;  // sorted ascending

  /// Value of Psi at an integer point, reduced mod q.
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t q) const;
};

KirchhoffPoly kirchhoff_polynomial(const Multigraph& g);

/// Upper bound on q^|E| for a single point count.
struct CountBudget {
  static constexpr std::uint64_t kDefaultMaxPoints = 100'000'000;

  std::uint64_t max_points = kDefaultMaxPoints;

  /// Default budget, overridden by the MELON_BUDGET environment variable.
  static CountBudget from_env();
};

bool is_prime(std::uint64_t q) noexcept;

/// #{ t in F_q^|E| : Psi_G(t) != 0 }, exact. Throws NonPrimeModulus,
/// BudgetExceeded (checked before any work) and DisconnectedGraph.
std::uint64_t count_complement_points(const Multigraph& g, std::uint64_t q,
                                      const CountBudget& budget = {});

struct PrimeCheck {
  std::uint64_t q = 0;
  std::uint64_t count = 0;
  BigInt expected;  // class evaluated at S = q - 2
  bool match = false;
};

struct VerificationReport {
  std::vector<PrimeCheck> checks;
  bool all_match() const noexcept;
};

/// Compare point counts with the class evaluated at L = q for each prime.
VerificationReport verify_class(const Multigraph& g, const ClassPoly& c,
                                const std::vector<std::uint64_t>& primes,
                                const CountBudget& budget = {});

/// Edge-list text: one "u v" pair per line with 0-based vertices, loops as
/// "u u". Blank lines and lines starting with '#' are ignored. The vertex count
/// is one more than the largest endpoint. Throws std::invalid_argument.
Multigraph parse_edge_list(std::istream& in);
std::string to_edge_list(const Multigraph& g);

}  // namespace melon::graph
