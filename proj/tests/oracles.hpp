#pragma once

// Brute-force reference implementations. None of these call into the
// library, so a test comparing against them checks two independent routes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "paleytype/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline std::int64_t modulus_of(const std::vector<std::int64_t>& primes) {
  std::int64_t n = 1;
  for (auto p : primes) n *= p;
  return n;
}

inline std::int64_t units(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) ++c;
  return n == 1 ? 1 : c;
}

inline std::set<std::int64_t> squares_of_units(std::int64_t n) {
  std::set<std::int64_t> out;
  for (std::int64_t x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) out.insert(x * x % n);
  return out;
}

/// +1 if a is a nonzero square mod p, -1 if a non-square, 0 if p | a.
inline int legendre_by_squares(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a == 0) return 0;
  return squares_of_units(p).count(a) ? 1 : -1;
}

inline int jacobi_by_squares(std::int64_t z, const std::vector<std::int64_t>& primes) {
  int s = 1;
  for (auto p : primes) s *= legendre_by_squares(z, p);
  return s;
}

/// Ordered pairs (a, b) in QR x QR with a - b = z (mod n).
inline std::int64_t difference_pairs(std::int64_t z, std::int64_t n) {
  const auto qr = squares_of_units(n);
  std::int64_t c = 0;
  for (auto a : qr)
    for (auto b : qr)
      if (((a - b) % n + n) % n == z) ++c;
  return c;
}

inline Matrix paley_matrix(std::int64_t n) {
  const auto qr = squares_of_units(n);
  Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      if (a != b && qr.count(((a - b) % n + n) % n)) m[a][b] = 1;
  return m;
}

inline Matrix to_matrix(const paleytype::Graph& g) {
  Matrix m(g.order(), std::vector<char>(g.order(), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

inline paleytype::Graph to_graph(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  return paleytype::Graph::from_predicate(n, [&](int u, int v) { return m[u][v] != 0; });
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.size(), nb = b.size();
  Matrix m(na * nb, std::vector<char>(na * nb, 0));
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      for (std::size_t x2 = 0; x2 < na; ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2)
          m[x * nb + y][x2 * nb + y2] = a[x][x2] && b[y][y2];
  return m;
}

inline Matrix random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Matrix m(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) m[u][v] = m[v][u] = 1;
  return m;
}

/// Counts all vertex permutations preserving adjacency. n <= 10.
inline std::uint64_t aut_count_by_permutations(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (m[u][v] != m[perm[u]][perm[v]]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline bool connected_without(const Matrix& m, const std::vector<char>& removed) {
  const int n = static_cast<int>(m.size());
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (m[u][v] && !removed[v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == alive;
}

/// Smallest vertex set whose removal disconnects the graph (n - 1 for
/// complete graphs). Exponential; n <= 16.
inline int vertex_connectivity_by_subsets(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best || size > n - 2) continue;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
    if (!connected_without(m, removed)) best = size;
  }
  return best;
}

/// Minimum number of edges crossing a proper nonempty vertex bipartition.
inline int edge_connectivity_by_cuts(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = n * n;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    int cut = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (m[u][v] && ((mask >> u) & 1u) && !((mask >> v) & 1u)) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

namespace detail {
inline bool extend(const Matrix& m, int k, std::vector<int>& path, std::vector<char>& used) {
  const int n = static_cast<int>(m.size());
  if (static_cast<int>(path.size()) == k) return m[path.back()][path.front()] != 0;
  for (int v = 0; v < n; ++v) {
    if (used[v] || !m[path.back()][v]) continue;
    used[v] = 1;
    path.push_back(v);
    if (extend(m, k, path, used)) return true;
    path.pop_back();
    used[v] = 0;
  }
  return false;
}
}  // namespace detail

/// Whether a simple cycle on exactly k vertices exists, trying every start.
inline bool has_cycle_of_length(const Matrix& m, int k) {
  const int n = static_cast<int>(m.size());
  for (int s = 0; s < n; ++s) {
    std::vector<int> path{s};
    std::vector<char> used(n, 0);
    used[s] = 1;
    if (detail::extend(m, k, path, used)) return true;
  }
  return false;
}

}  // namespace oracle
