#ifndef IDPRISM_TESTS_ORACLES_HPP
#define IDPRISM_TESTS_ORACLES_HPP

// Brute-force reference implementations over plain adjacency matrices. They
// share no code with the library beyond reading a graph's edge list.

#include "idprism/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline auto matrix_of(const idprism::Graph & g) -> Matrix {
  Matrix m(static_cast<std::size_t>(g.order()), std::vector<bool>(static_cast<std::size_t>(g.order()), false));
  for (auto [u, v] : g.edges())
    m[u][v] = m[v][u] = true;
  return m;
}

/// Complementary prism of the n-cycle straight from the definition: v_i is
/// vertex i-1, vbar_i is vertex n+i-1.
inline auto cycle_prism_matrix(int n) -> Matrix {
  Matrix m(static_cast<std::size_t>(2 * n), std::vector<bool>(static_cast<std::size_t>(2 * n), false));
  auto cyc = [&](int i, int j) { int d = std::abs(i - j); return d == 1 || d == n - 1; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (cyc(i, j))
        m[i][j] = true;
      else
        m[n + i][n + j] = true;
    }
  for (int i = 0; i < n; ++i)
    m[i][n + i] = m[n + i][i] = true;
  return m;
}

inline auto bfs_distances(const Matrix & m, int src) -> std::vector<int> {
  std::vector<int> dist(m.size(), -1);
  std::deque<int> q{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[u][v] && dist[v] < 0) {
        dist[v] = dist[static_cast<std::size_t>(u)] + 1;
        q.push_back(static_cast<int>(v));
      }
  }
  return dist;
}

inline auto ball(const Matrix & m, int u, int d) -> std::set<int> {
  std::set<int> out;
  auto dist = bfs_distances(m, u);
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] >= 0 && dist[v] <= d)
      out.insert(static_cast<int>(v));
  return out;
}

inline auto all_balls(const Matrix & m, int d) -> std::vector<std::set<int>> {
  std::vector<std::set<int>> out;
  for (int u = 0; u < static_cast<int>(m.size()); ++u)
    out.push_back(ball(m, u, d));
  return out;
}

inline auto is_identifying(const std::vector<std::set<int>> & balls, const std::set<int> & code) -> bool {
  std::set<std::set<int>> seen;
  for (const auto & b : balls) {
    std::set<int> in;
    for (int v : b)
      if (code.count(v))
        in.insert(v);
    if (in.empty() || !seen.insert(in).second)
      return false;
  }
  return true;
}

inline auto is_identifying(const Matrix & m, int d, const std::set<int> & code) -> bool {
  std::set<std::set<int>> seen;
  for (int u = 0; u < static_cast<int>(m.size()); ++u) {
    std::set<int> in;
    for (int v : ball(m, u, d))
      if (code.count(v))
        in.insert(v);
    if (in.empty() || !seen.insert(in).second)
      return false;
  }
  return true;
}

inline auto twins(const Matrix & m, int d) -> std::vector<std::pair<int, int>> {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(m.size()); ++u)
    for (int v = u + 1; v < static_cast<int>(m.size()); ++v)
      if (ball(m, u, d) == ball(m, v, d))
        out.emplace_back(u, v);
  return out;
}

/// Minimum identifying code size by scanning all subsets (order <= 20).
inline auto min_code_size(const Matrix & m, int d) -> int {
  const int n = static_cast<int>(m.size());
  const auto balls = all_balls(m, d);
  int best = -1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int k = std::popcount(mask);
    if (best >= 0 && k >= best)
      continue;
    std::set<int> code;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U)
        code.insert(v);
    if (is_identifying(balls, code))
      best = k;
  }
  return best;
}

inline auto isomorphic(const Matrix & a, const Matrix & b) -> bool {
  if (a.size() != b.size())
    return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u)
      for (std::size_t v = 0; v < a.size() && ok; ++v)
        ok = a[u][v] == b[perm[u]][perm[v]];
    if (ok)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of classes of `part` under N[u] minus part, straight from the matrix.
inline auto class_count(const Matrix & m, const std::set<int> & part) -> int {
  std::set<std::set<int>> sigs;
  for (int u : part) {
    std::set<int> sig;
    for (int v = 0; v < static_cast<int>(m.size()); ++v)
      if ((v == u || m[u][v]) && !part.count(v))
        sig.insert(v);
    sigs.insert(sig);
  }
  return static_cast<int>(sigs.size());
}

} // namespace oracle

#endif
