#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace melon::testing {

IntPoly divide_by_x_plus_two(const IntPoly& p) {
  const auto& a = p.coeffs();
  if (a.empty()) return {};
  // Synthetic division by the root -2, from the top coefficient down.
  std::vector<BigInt> q(a.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = a.size(); i-- > 1;) {
    carry = a[i] - 2 * carry;
    q[i - 1] = carry;
  }
  if (a[0] - 2 * carry != 0) throw std::logic_error("not divisible by x + 2");
  return IntPoly(std::move(q));
}

IntPoly f_by_division(int m) {
  return divide_by_x_plus_two(IntPoly::binomial_power(1, static_cast<unsigned>(m)) -
                              IntPoly{m % 2 == 0 ? 1L : -1L});
}

IntPoly banana_by_division(int n) {
  // In T the divisor T + 1 becomes S + 2 after the shift T = S + 1.
  const IntPoly t{1, 1};
  const IntPoly numerator = pow(t, static_cast<unsigned>(n)) - IntPoly{n % 2 == 0 ? 1L : -1L};
  return t * divide_by_x_plus_two(numerator) + BigInt(n) * pow(t, static_cast<unsigned>(n - 1));
}

BigInt matrix_tree_count(const graph::Multigraph& g) {
  const int n = g.num_vertices() - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<BigInt>> lap(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const int u = e.u - 1, v = e.v - 1;
    if (u >= 0) lap[u][u] += 1;
    if (v >= 0) lap[v][v] += 1;
    if (u >= 0 && v >= 0) {
      lap[u][v] -= 1;
      lap[v][u] -= 1;
    }
  }
  // Fraction-free Gaussian elimination.
  BigInt prev = 1;
  BigInt sign = 1;
  for (int k = 0; k < n; ++k) {
    if (lap[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n && swap < 0; ++r) {
        if (lap[r][k] != 0) swap = r;
      }
      if (swap < 0) return 0;
      std::swap(lap[k], lap[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        lap[i][j] = (lap[i][j] * lap[k][k] - lap[i][k] * lap[k][j]) / prev;
      }
      lap[i][k] = 0;
    }
    prev = lap[k][k];
  }
  return sign * lap[n - 1][n - 1];
}

std::vector<graph::EdgeSet> brute_force_spanning_trees(const graph::Multigraph& g) {
  const int e = g.num_edges();
  const int need = g.num_vertices() - 1;
  if (e > 24) throw std::invalid_argument("too many edges for brute force");
  std::vector<graph::EdgeSet> out;
  for (graph::EdgeSet s = 0; s < (graph::EdgeSet{1} << e); ++s) {
    if (__builtin_popcountll(s) != need) continue;
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int i = 0; i < e && acyclic; ++i) {
      if (!(s >> i & 1U)) continue;
      const int a = find(g.edge(i).u), b = find(g.edge(i).v);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) out.push_back(s);
  }
  return out;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  std::uint64_t r = 1, e = q - 2;
  while (e) {
    if (e & 1U) r = r * a % q;
    a = a * a % q;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t psi_by_determinant(const graph::Multigraph& g, const std::vector<std::uint64_t>& t,
                                 std::uint64_t q) {
  const int e = g.num_edges();
  const int v = g.num_vertices() - 1;
  const int n = e + v;
  std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < e; ++i) {
    m[i][i] = t[i] % q;
    const auto& edge = g.edge(i);
    if (edge.is_loop()) continue;
    // Oriented u -> v; vertex 0 is the dropped row.
    if (edge.u > 0) {
      m[i][e + edge.u - 1] = 1;
      m[e + edge.u - 1][i] = q - 1;
    }
    if (edge.v > 0) {
      m[i][e + edge.v - 1] = q - 1;
      m[e + edge.v - 1][i] = 1;
    }
  }
  std::uint64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n && piv < 0; ++r) {
      if (m[r][k] != 0) piv = r;
    }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = (q - det) % q;
    }
    det = det * m[k][k] % q;
    const std::uint64_t inv = inverse_mod(m[k][k], q);
    for (int r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      const std::uint64_t factor = m[r][k] * inv % q;
      for (int c = k; c < n; ++c) m[r][c] = (m[r][c] + (q - factor) * m[k][c]) % q;
    }
  }
  return det;
}

std::uint64_t naive_complement_count(const graph::Multigraph& g, std::uint64_t q) {
  const int e = g.num_edges();
  std::vector<std::uint64_t> t(static_cast<std::size_t>(e), 0);
  std::uint64_t count = 0;
  for (;;) {
    if (psi_by_determinant(g, t, q) != 0) ++count;
    int i = 0;
    while (i < e && ++t[i] == q) t[i++] = 0;
    if (i == e) return count;
  }
}

}  // namespace melon::testing
