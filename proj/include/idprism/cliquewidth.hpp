#ifndef IDPRISM_CLIQUEWIDTH_HPP
#define IDPRISM_CLIQUEWIDTH_HPP

/**
 * Layout trees and equivalence-class counting. For a tree node s with leaf
 * set V_s, u ~ v iff N[u] \ V_s = N[v] \ V_s; the class count of s is the
 * number of classes of V_s. Replacing each leaf u by a node with children u
 * and ubar turns a layout of G into a layout of its complementary prism, and
 * the class counts at most double under this replacement.
 */

#include "idprism/bitset.hpp"
#include "idprism/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace idprism {

class LayoutTree
{
public:
  struct Node
  {
    int leaf = -1; ///< vertex for leaves, -1 for internal nodes
    int left = -1;
    int right = -1;

    auto is_leaf() const -> bool { return leaf >= 0; }
  };

  LayoutTree() = default;

  /// Appends a leaf and returns its node id.
  auto add_leaf(int vertex) -> int {
    if (vertex < 0)
      throw std::domain_error("leaf label must be a vertex index");
    _nodes.push_back({vertex, -1, -1});
    _root = static_cast<int>(_nodes.size()) - 1;
    return _root;
  }

  /// Appends an internal node over two existing subtrees and makes it the root.
  auto join(int left, int right) -> int {
    const int count = static_cast<int>(_nodes.size());
    if (left < 0 || right < 0 || left >= count || right >= count || left == right)
      throw std::domain_error("join needs two distinct existing nodes");
    _nodes.push_back({-1, left, right});
    _root = static_cast<int>(_nodes.size()) - 1;
    return _root;
  }

  auto root() const -> int { return _root; }

  auto set_root(int id) -> void {
    if (id < 0 || id >= static_cast<int>(_nodes.size()))
      throw std::domain_error("root must be an existing node");
    _root = id;
  }
  auto nodes() const -> const std::vector<Node> & { return _nodes; }
  auto node(int id) const -> const Node & { return _nodes[static_cast<std::size_t>(id)]; }
  auto empty() const -> bool { return _root < 0; }

  auto leaf_count() const -> int {
    return static_cast<int>(std::count_if(_nodes.begin(), _nodes.end(), [](const Node & x) { return x.is_leaf(); }));
  }

  auto internal_count() const -> int { return static_cast<int>(_nodes.size()) - leaf_count(); }

  /// Leaf labels from left to right.
  auto leaf_order() const -> std::vector<int> {
    std::vector<int> out;
    if (!empty())
      collect(_root, out);
    return out;
  }

  /**
   * Throws std::domain_error unless every node is reachable from the root
   * exactly once and the leaves are exactly the vertices 0..order-1.
   */
  auto validate(int order) const -> void {
    if (empty()) {
      if (order != 0)
        throw std::domain_error("empty layout tree for a nonempty graph");
      return;
    }
    std::vector<int> seen(_nodes.size(), 0);
    std::vector<int> stack{_root};
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      if (seen[static_cast<std::size_t>(id)]++)
        throw std::domain_error("layout tree node reached twice");
      const Node & x = node(id);
      if (!x.is_leaf()) {
        if (x.left < 0 || x.right < 0)
          throw std::domain_error("internal node without two children");
        stack.push_back(x.left);
        stack.push_back(x.right);
      }
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0)
      throw std::domain_error("layout tree has unreachable nodes");
    auto leaves = leaf_order();
    std::sort(leaves.begin(), leaves.end());
    std::vector<int> expected(static_cast<std::size_t>(order));
    std::iota(expected.begin(), expected.end(), 0);
    if (leaves != expected)
      throw std::domain_error("layout tree leaves do not match the graph's vertices");
  }

  /// Nested parentheses over 1-based labels, e.g. "((1,2),(3,4))".
  auto to_string() const -> std::string {
    if (empty())
      return "";
    std::string s;
    write(_root, s);
    return s;
  }

  static auto parse(const std::string & text) -> LayoutTree {
    LayoutTree t;
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
    };
    auto fail = [&](const std::string & what) -> int {
      throw std::invalid_argument("layout tree parse error at offset " + std::to_string(pos) + ": " + what);
    };
    auto expect = [&](char c) {
      skip();
      if (pos >= text.size() || text[pos] != c)
        fail(std::string("expected '") + c + "'");
      ++pos;
    };
    auto subtree = [&](auto & self) -> int {
      skip();
      if (pos >= text.size())
        return fail("unexpected end of input");
      if (text[pos] == '(') {
        ++pos;
        const int l = self(self);
        expect(',');
        const int r = self(self);
        expect(')');
        return t.join(l, r);
      }
      if (text[pos] < '0' || text[pos] > '9')
        return fail("expected a leaf label or '('");
      long label = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        label = label * 10 + (text[pos++] - '0');
        if (label > 100'000'000)
          return fail("leaf label too large");
      }
      if (label < 1)
        return fail("leaf labels are 1-based");
      return t.add_leaf(static_cast<int>(label - 1));
    };
    subtree(subtree);
    skip();
    if (pos != text.size())
      fail("trailing characters");
    return t;
  }

private:
  auto collect(int id, std::vector<int> & out) const -> void {
    const Node & x = node(id);
    if (x.is_leaf()) {
      out.push_back(x.leaf);
      return;
    }
    collect(x.left, out);
    collect(x.right, out);
  }

  auto write(int id, std::string & s) const -> void {
    const Node & x = node(id);
    if (x.is_leaf()) {
      s += std::to_string(x.leaf + 1);
      return;
    }
    s += '(';
    write(x.left, s);
    s += ',';
    write(x.right, s);
    s += ')';
  }

  std::vector<Node> _nodes;
  int _root = -1;
};

namespace detail {

inline auto build_over(LayoutTree & t, const std::vector<int> & labels, std::size_t lo, std::size_t hi,
                       std::mt19937_64 * rng) -> int {
  if (hi - lo == 1)
    return t.add_leaf(labels[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  if (rng)
    mid = lo + 1 + static_cast<std::size_t>((*rng)() % (hi - lo - 1));
  const int l = build_over(t, labels, lo, mid, rng);
  const int r = build_over(t, labels, mid, hi, rng);
  return t.join(l, r);
}

} // namespace detail

/// Balanced tree over leaves 0..order-1 in order.
inline auto balanced_layout(int order) -> LayoutTree {
  LayoutTree t;
  if (order <= 0)
    return t;
  std::vector<int> labels(static_cast<std::size_t>(order));
  std::iota(labels.begin(), labels.end(), 0);
  detail::build_over(t, labels, 0, labels.size(), nullptr);
  return t;
}

/// ((((0,1),2),3),...)
inline auto caterpillar_layout(const std::vector<int> & leaf_order) -> LayoutTree {
  LayoutTree t;
  if (leaf_order.empty())
    return t;
  int acc = t.add_leaf(leaf_order.front());
  for (std::size_t k = 1; k < leaf_order.size(); ++k)
    acc = t.join(acc, t.add_leaf(leaf_order[k]));
  return t;
}

/// Random split points over a shuffled vertex order.
inline auto random_layout(int order, std::mt19937_64 & rng) -> LayoutTree {
  LayoutTree t;
  if (order <= 0)
    return t;
  std::vector<int> labels(static_cast<std::size_t>(order));
  std::iota(labels.begin(), labels.end(), 0);
  // Fisher-Yates on raw draws; std::shuffle is not portable across libraries.
  for (std::size_t k = labels.size(); k > 1; --k)
    std::swap(labels[k - 1], labels[static_cast<std::size_t>(rng() % k)]);
  detail::build_over(t, labels, 0, labels.size(), &rng);
  return t;
}

struct ClassCountProfile
{
  /// Indexed by node id.
  std::vector<int> class_counts;
  int max_classes = 0;
};

inline auto class_profile(const Graph & g, const LayoutTree & t) -> ClassCountProfile {
  t.validate(g.order());
  ClassCountProfile p;
  p.class_counts.assign(t.nodes().size(), 0);
  if (t.empty())
    return p;

  const auto order = static_cast<std::size_t>(g.order());
  std::vector<Bitset> below(t.nodes().size(), Bitset(order));
  // Children always precede their parent in node order.
  for (std::size_t id = 0; id < t.nodes().size(); ++id) {
    const auto & x = t.nodes()[id];
    if (x.is_leaf())
      below[id].set(static_cast<std::size_t>(x.leaf));
    else
      below[id] = below[static_cast<std::size_t>(x.left)] | below[static_cast<std::size_t>(x.right)];

    std::set<Bitset> signatures;
    below[id].for_each([&](std::size_t u) {
      Bitset sig = g.closed_neighbourhood(static_cast<int>(u));
      sig.subtract(below[id]);
      signatures.insert(std::move(sig));
    });
    p.class_counts[id] = static_cast<int>(signatures.size());
    p.max_classes = std::max(p.max_classes, p.class_counts[id]);
  }
  return p;
}

/// Each leaf u (of a layout over n vertices) becomes a node with children u and n+u.
inline auto prism_layout(const LayoutTree & t) -> LayoutTree {
  LayoutTree out;
  if (t.empty())
    return out;
  const int n = t.leaf_count();
  std::vector<int> mapped(t.nodes().size(), -1);
  for (std::size_t id = 0; id < t.nodes().size(); ++id) {
    const auto & x = t.nodes()[id];
    if (x.is_leaf()) {
      const int u = out.add_leaf(x.leaf);
      const int ubar = out.add_leaf(n + x.leaf);
      mapped[id] = out.join(u, ubar);
    } else {
      mapped[id] = out.join(mapped[static_cast<std::size_t>(x.left)], mapped[static_cast<std::size_t>(x.right)]);
    }
  }
  out.set_root(mapped[static_cast<std::size_t>(t.root())]);
  return out;
}

struct DoublingCheck
{
  int base_classes;
  int prism_classes;
  bool ok;
};

inline auto check_doubling(const Graph & g, const LayoutTree & t) -> DoublingCheck {
  const int a = class_profile(g, t).max_classes;
  const int b = class_profile(complementary_prism(g).first, prism_layout(t)).max_classes;
  return {a, b, b <= 2 * a};
}

} // namespace idprism

#endif
