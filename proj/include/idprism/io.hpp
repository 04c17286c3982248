#ifndef IDPRISM_IO_HPP
#define IDPRISM_IO_HPP

/**
 * Text formats.
 *
 *   graph:       "p <order> <edge-count>" then "e <u> <v>" per edge, 1-based,
 *                edges sorted; lines starting with 'c' are comments.
 *   code pair:   two lines of n characters over {0,1}: x, then xbar.
 *   vertex set:  one bitstring of length order, a code pair (prisms only), or
 *                whitespace-separated labels (1-based integers, "v3", "vbar7").
 *   hitting set: "h <universe> <constraint-count>" then one line per
 *                constraint with 1-based vertices terminated by 0.
 */

#include "idprism/bitset.hpp"
#include "idprism/cycle_prism.hpp"
#include "idprism/graph.hpp"
#include "idprism/idcode.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace idprism {

class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline auto parse_int(const std::string & tok, const std::string & context) -> long long {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(context + ": expected an integer, got '" + tok + "'");
  return v;
}

inline auto is_bitstring(const std::string & s) -> bool {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

inline auto tokens(std::istream & in) -> std::vector<std::string> {
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

} // namespace detail

inline auto write_graph(std::ostream & out, const Graph & g) -> void {
  const auto es = g.edges();
  out << "p " << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es)
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline auto graph_to_string(const Graph & g) -> std::string {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

inline auto read_graph(std::istream & in) -> Graph {
  std::string line;
  std::optional<int> order;
  long long declared = 0;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c')
      continue;
    const std::string where = "line " + std::to_string(lineno);
    std::vector<std::string> rest;
    for (std::string t; ls >> t;)
      rest.push_back(t);
    if (tag == "p") {
      if (order)
        throw ParseError(where + ": duplicate header");
      if (rest.size() != 2)
        throw ParseError(where + ": header must be 'p <order> <edge-count>'");
      const auto o = detail::parse_int(rest[0], where);
      declared = detail::parse_int(rest[1], where);
      if (o < 0 || o > 1'000'000 || declared < 0)
        throw ParseError(where + ": header values out of range");
      order = static_cast<int>(o);
    } else if (tag == "e") {
      if (!order)
        throw ParseError(where + ": edge before header");
      if (rest.size() != 2)
        throw ParseError(where + ": edge must be 'e <u> <v>'");
      const auto u = detail::parse_int(rest[0], where);
      const auto v = detail::parse_int(rest[1], where);
      if (u < 1 || v < 1 || u > *order || v > *order)
        throw ParseError(where + ": vertex out of range");
      if (u == v)
        throw ParseError(where + ": loops are not allowed");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(where + ": unknown line type '" + tag + "'");
    }
  }
  if (!order)
    throw ParseError("missing 'p' header");
  Graph g(*order, edges);
  if (static_cast<long long>(g.edge_count()) != declared)
    throw ParseError("header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(g.edge_count()) + " distinct edges");
  return g;
}

inline auto graph_from_string(const std::string & s) -> Graph {
  std::istringstream in(s);
  return read_graph(in);
}

/// The prism indexing if g is exactly the complementary prism of its first half.
inline auto detect_prism(const Graph & g) -> std::optional<PrismIndexing> {
  if (g.order() == 0 || g.order() % 2 != 0)
    return std::nullopt;
  const int n = g.order() / 2;
  if (complementary_prism(g.induced_range(0, n)).first == g)
    return PrismIndexing{n};
  return std::nullopt;
}

inline auto vertex_label(int v, const std::optional<PrismIndexing> & prism) -> std::string {
  return prism ? prism->label(v) : std::to_string(v + 1);
}

inline auto write_code_pair(std::ostream & out, const CodePair & c) -> void {
  out << c.x_string() << '\n' << c.xbar_string() << '\n';
}

inline auto read_code_pair(std::istream & in) -> CodePair {
  const auto toks = detail::tokens(in);
  if (toks.size() != 2)
    throw ParseError("code pair must be exactly two lines of 0/1 characters");
  for (const auto & t : toks)
    if (!detail::is_bitstring(t))
      throw ParseError("code pair rows may only contain '0' and '1': '" + t + "'");
  if (toks[0].size() != toks[1].size())
    throw ParseError("code pair rows differ in length");
  return CodePair::from_strings(toks[0], toks[1]);
}

/// Figure-style picture: the complement row above the cycle row, '#' marks a code vertex.
inline auto render_ascii(const CodePair & c) -> std::string {
  std::string top = "vbar |";
  std::string bottom = "v    |";
  for (int i = 1; i <= c.n(); ++i) {
    top += c.xbar(i) ? '#' : '.';
    bottom += c.x(i) ? '#' : '.';
    if (i % 9 == 0 && i != c.n()) {
      top += '|';
      bottom += '|';
    }
  }
  return top + "|\n" + bottom + "|\n";
}

inline auto read_vertex_set(std::istream & in, const Graph & g) -> Bitset {
  const auto order = static_cast<std::size_t>(g.order());
  const auto toks = detail::tokens(in);
  const auto prism = detect_prism(g);
  Bitset set(order);
  if (toks.empty())
    return set;

  const bool all_bits = std::all_of(toks.begin(), toks.end(), detail::is_bitstring);
  if (all_bits && toks.size() == 1 && toks[0].size() == order && order > 1) {
    for (std::size_t k = 0; k < order; ++k)
      set.assign(k, toks[0][k] == '1');
    return set;
  }
  if (all_bits && toks.size() == 2 && prism && toks[0].size() == static_cast<std::size_t>(prism->n) &&
      toks[1].size() == toks[0].size() && prism->n > 1)
    return CodePair::from_strings(toks[0], toks[1]).to_prism_set();

  for (const auto & t : toks) {
    if (!t.empty() && t[0] == 'v') {
      if (!prism)
        throw ParseError("label '" + t + "' needs a complementary prism graph");
      try {
        set.set(static_cast<std::size_t>(prism->parse_label(t)));
      } catch (const std::invalid_argument & e) {
        throw ParseError(e.what());
      }
      continue;
    }
    const auto v = detail::parse_int(t, "vertex set");
    if (v < 1 || v > static_cast<long long>(order))
      throw ParseError("vertex " + t + " out of range");
    set.set(static_cast<std::size_t>(v - 1));
  }
  return set;
}

inline auto write_hitting_instance(std::ostream & out, const HittingInstance & inst) -> void {
  out << "h " << inst.universe << ' ' << inst.constraints.size() << '\n';
  for (const auto & c : inst.constraints) {
    c.for_each([&](std::size_t v) { out << v + 1 << ' '; });
    out << "0\n";
  }
}

} // namespace idprism

#endif
