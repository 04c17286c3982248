#ifndef IDPRISM_GRAPH_HPP
#define IDPRISM_GRAPH_HPP

/**
 * Immutable simple undirected graphs with bitset adjacency rows, the
 * cycle / complement / complementary-prism constructions, distance balls
 * and closed-twin detection.
 */

#include "idprism/bitset.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idprism {

using Edge = std::pair<int, int>;

class Graph
{
public:
  Graph() = default;

  /// Builds a graph on `order` vertices. Loops and out-of-range endpoints are
  /// rejected; repeated edges collapse.
  Graph(int order, const std::vector<Edge> & edges) : _order(order) {
    if (order < 0)
      throw std::domain_error("graph order must be non-negative");
    _adj.assign(static_cast<std::size_t>(order), Bitset(static_cast<std::size_t>(order)));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order)
        throw std::domain_error("edge endpoint out of range");
      if (u == v)
        throw std::domain_error("loops are not allowed in a simple graph");
      _adj[u].set(static_cast<std::size_t>(v));
      _adj[v].set(static_cast<std::size_t>(u));
    }
  }

  /// Takes ownership of adjacency rows; they must be symmetric and irreflexive.
  static auto from_rows(std::vector<Bitset> rows) -> Graph {
    Graph g;
    g._order = static_cast<int>(rows.size());
    for (std::size_t u = 0; u < rows.size(); ++u) {
      if (rows[u].size() != rows.size())
        throw std::domain_error("adjacency row has wrong size");
      if (rows[u].test(u))
        throw std::domain_error("adjacency is not irreflexive");
    }
    for (std::size_t u = 0; u < rows.size(); ++u)
      rows[u].for_each([&](std::size_t v) {
        if (!rows[v].test(u))
          throw std::domain_error("adjacency is not symmetric");
      });
    g._adj = std::move(rows);
    return g;
  }

  auto order() const -> int { return _order; }

  auto adjacent(int u, int v) const -> bool {
    return _adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }

  auto neighbours(int u) const -> const Bitset & { return _adj[static_cast<std::size_t>(u)]; }

  auto closed_neighbourhood(int u) const -> Bitset {
    Bitset b = _adj[static_cast<std::size_t>(u)];
    b.set(static_cast<std::size_t>(u));
    return b;
  }

  auto degree(int u) const -> int { return static_cast<int>(neighbours(u).count()); }

  auto edge_count() const -> std::size_t {
    std::size_t twice = 0;
    for (const auto & row : _adj)
      twice += row.count();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    for (int u = 0; u < _order; ++u)
      _adj[static_cast<std::size_t>(u)].for_each([&](std::size_t v) {
        if (static_cast<int>(v) > u)
          out.emplace_back(u, static_cast<int>(v));
      });
    return out;
  }

  /// Subgraph induced by vertices first..first+count-1, relabelled from 0.
  auto induced_range(int first, int count) const -> Graph {
    if (first < 0 || count < 0 || first + count > _order)
      throw std::domain_error("induced range out of bounds");
    std::vector<Edge> es;
    for (int u = 0; u < count; ++u)
      for (int v = u + 1; v < count; ++v)
        if (adjacent(first + u, first + v))
          es.emplace_back(u, v);
    return Graph(count, es);
  }

  friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
  int _order = 0;
  std::vector<Bitset> _adj;
};

/// The cycle C_n with edges {i, (i+1) mod n}.
inline auto cycle(int n) -> Graph {
  if (n < 3)
    throw std::domain_error("a cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

inline auto path(int n) -> Graph {
  if (n < 1)
    throw std::domain_error("a path needs at least 1 vertex");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i)
    es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline auto complete(int n) -> Graph {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      es.emplace_back(u, v);
  return Graph(n, es);
}

inline auto complement(const Graph & g) -> Graph {
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u) {
    Bitset row = g.neighbours(u);
    row.flip_all();
    row.reset(static_cast<std::size_t>(u));
    rows.push_back(std::move(row));
  }
  return Graph::from_rows(std::move(rows));
}

/**
 * Index convention for complementary prisms: the vertex v_i (1-based i) of G
 * is vertex i-1, its copy in the complement is vertex n+i-1.
 */
struct PrismIndexing
{
  int n = 0;

  auto order() const -> int { return 2 * n; }
  auto is_bar(int v) const -> bool { return v >= n; }
  /// 1-based position i of v_i or vbar_i.
  auto position(int v) const -> int { return (v % n) + 1; }
  auto vertex(int i) const -> int { return i - 1; }
  auto bar_vertex(int i) const -> int { return n + i - 1; }
  auto partner(int v) const -> int { return v < n ? v + n : v - n; }

  auto label(int v) const -> std::string {
    return (is_bar(v) ? "vbar" : "v") + std::to_string(position(v));
  }

  /// Parses "v3" / "vbar7"; throws std::invalid_argument on anything else.
  auto parse_label(const std::string & s) const -> int {
    auto digits = [&](std::size_t from) {
      if (from >= s.size())
        throw std::invalid_argument("bad prism vertex label: " + s);
      int x = 0;
      for (std::size_t k = from; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9' || x > 1'000'000)
          throw std::invalid_argument("bad prism vertex label: " + s);
        x = x * 10 + (s[k] - '0');
      }
      if (x < 1 || x > n)
        throw std::invalid_argument("prism vertex label out of range: " + s);
      return x;
    };
    if (s.starts_with("vbar"))
      return bar_vertex(digits(4));
    if (s.starts_with("v"))
      return vertex(digits(1));
    throw std::invalid_argument("bad prism vertex label: " + s);
  }
};

/// G plus its complement on shifted indices plus the matching {i, n+i}.
inline auto complementary_prism(const Graph & g) -> std::pair<Graph, PrismIndexing> {
  const int n = g.order();
  const auto size = static_cast<std::size_t>(2 * n);
  std::vector<Bitset> rows(size, Bitset(size));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v)
        continue;
      if (g.adjacent(u, v))
        rows[u].set(static_cast<std::size_t>(v));
      else
        rows[n + u].set(static_cast<std::size_t>(n + v));
    }
    rows[u].set(static_cast<std::size_t>(n + u));
    rows[n + u].set(static_cast<std::size_t>(u));
  }
  return {Graph::from_rows(std::move(rows)), PrismIndexing{n}};
}

inline auto cycle_prism(int n) -> std::pair<Graph, PrismIndexing> {
  return complementary_prism(cycle(n));
}

/// G(order, p) from the raw output of a 64-bit Mersenne twister, so the same
/// seed gives the same graph on every standard library.
inline auto random_graph(int order, double p, std::mt19937_64 & rng) -> Graph {
  std::vector<Edge> es;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
        es.emplace_back(u, v);
  return Graph(order, es);
}

/// Closed d-balls N^{<=d}[u] for every vertex.
class BallTable
{
public:
  BallTable(const Graph & g, int d) : _radius(d) {
    if (d < 1)
      throw std::domain_error("ball radius must be at least 1, got " + std::to_string(d));
    _balls.reserve(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) {
      Bitset ball = g.closed_neighbourhood(u);
      for (int round = 1; round < d; ++round) {
        Bitset grown = ball;
        ball.for_each([&](std::size_t w) { grown |= g.neighbours(static_cast<int>(w)); });
        if (grown == ball)
          break;
        ball = std::move(grown);
      }
      _balls.push_back(std::move(ball));
    }
  }

  auto radius() const -> int { return _radius; }
  auto order() const -> int { return static_cast<int>(_balls.size()); }
  auto ball(int u) const -> const Bitset & { return _balls[static_cast<std::size_t>(u)]; }
  auto balls() const -> const std::vector<Bitset> & { return _balls; }

private:
  int _radius;
  std::vector<Bitset> _balls;
};

inline auto ball_table(const Graph & g, int d) -> BallTable { return BallTable(g, d); }

/// All pairs u < v with equal d-balls, in lexicographic order.
inline auto closed_twins(const BallTable & balls) -> std::vector<Edge> {
  std::vector<Edge> out;
  for (int u = 0; u < balls.order(); ++u)
    for (int v = u + 1; v < balls.order(); ++v)
      if (balls.ball(u) == balls.ball(v))
        out.emplace_back(u, v);
  return out;
}

inline auto closed_twins(const Graph & g, int d) -> std::vector<Edge> {
  return closed_twins(BallTable(g, d));
}

} // namespace idprism

#endif
