#ifndef IDPRISM_CYCLE_PRISM_HPP
#define IDPRISM_CYCLE_PRISM_HPP

/**
 * Identifying codes in the complementary prism of a cycle, C_n with its
 * complement joined by a perfect matching.
 *
 * A code is described by two 0/1 vectors over positions 1..n: x for the cycle
 * side and xbar for the complement side. All position arithmetic is mod n.
 * For n >= 9 five local families of linear inequalities are necessary for a
 * code, and they are sufficient once at least four complement vertices are in
 * the code:
 *
 *   C(i)        x[i-1] + x[i] + xbar[i] + x[i+1]                           >= 1
 *   C(i,i+1)    x[i-1] + xbar[i] + xbar[i+1] + x[i+2]                      >= 1
 *   C(i,i+2)    x[i-1] + x[i] + xbar[i] + x[i+2] + xbar[i+2] + x[i+3]      >= 1
 *   Cbar(i,j)   xbar[i-1] + x[i] + xbar[i+1] + xbar[j-1] + x[j] + xbar[j+1] >= 1
 *               for every ordered pair with (j - i) mod n not in {0, 2}
 *   Cbar(i,i+2) xbar[i-1] + x[i] + x[i+2] + xbar[i+3]                      >= 1
 */

#include "idprism/bitset.hpp"
#include "idprism/graph.hpp"
#include "idprism/idcode.hpp"
#include "idprism/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idprism {

class CodePair
{
public:
  CodePair() = default;
  explicit CodePair(int n) : _n(n), _x(static_cast<std::size_t>(n)), _xbar(static_cast<std::size_t>(n)) {
    if (n < 1)
      throw std::domain_error("code pair needs n >= 1");
  }

  CodePair(Bitset x, Bitset xbar) : _n(static_cast<int>(x.size())), _x(std::move(x)), _xbar(std::move(xbar)) {
    if (_xbar.size() != _x.size() || _n < 1)
      throw std::domain_error("x and xbar must have the same positive length");
  }

  /// Builds from two strings over {0,1}.
  static auto from_strings(const std::string & x, const std::string & xbar) -> CodePair {
    if (x.size() != xbar.size() || x.empty())
      throw std::invalid_argument("x and xbar rows must be nonempty and of equal length");
    CodePair c(static_cast<int>(x.size()));
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (char ch : {x[k], xbar[k]})
        if (ch != '0' && ch != '1')
          throw std::invalid_argument("code rows may only contain '0' and '1'");
      c._x.assign(k, x[k] == '1');
      c._xbar.assign(k, xbar[k] == '1');
    }
    return c;
  }

  /// Reads a subset of the prism's vertex set under PrismIndexing.
  static auto from_prism_set(int n, const Bitset & set) -> CodePair {
    if (set.size() != static_cast<std::size_t>(2 * n))
      throw std::domain_error("prism vertex set has wrong size");
    CodePair c(n);
    for (int k = 0; k < n; ++k) {
      c._x.assign(static_cast<std::size_t>(k), set.test(static_cast<std::size_t>(k)));
      c._xbar.assign(static_cast<std::size_t>(k), set.test(static_cast<std::size_t>(n + k)));
    }
    return c;
  }

  auto n() const -> int { return _n; }

  /// Wraps any integer position onto 0..n-1; position i is paper-style 1-based.
  auto slot(int i) const -> std::size_t { return static_cast<std::size_t>(((i - 1) % _n + _n) % _n); }

  auto x(int i) const -> int { return _x.test(slot(i)) ? 1 : 0; }
  auto xbar(int i) const -> int { return _xbar.test(slot(i)) ? 1 : 0; }
  auto set_x(int i, bool v) -> void { _x.assign(slot(i), v); }
  auto set_xbar(int i, bool v) -> void { _xbar.assign(slot(i), v); }

  auto x_bits() const -> const Bitset & { return _x; }
  auto xbar_bits() const -> const Bitset & { return _xbar; }

  auto cycle_count() const -> int { return static_cast<int>(_x.count()); }
  auto complement_count() const -> int { return static_cast<int>(_xbar.count()); }
  auto size() const -> int { return cycle_count() + complement_count(); }

  auto to_prism_set() const -> Bitset {
    Bitset s(static_cast<std::size_t>(2 * _n));
    _x.for_each([&](std::size_t k) { s.set(k); });
    _xbar.for_each([&](std::size_t k) { s.set(static_cast<std::size_t>(_n) + k); });
    return s;
  }

  auto x_string() const -> std::string { return row_string(_x); }
  auto xbar_string() const -> std::string { return row_string(_xbar); }

  friend auto operator==(const CodePair &, const CodePair &) -> bool = default;

private:
  static auto row_string(const Bitset & b) -> std::string {
    std::string s(b.size(), '0');
    b.for_each([&](std::size_t k) { s[k] = '1'; });
    return s;
  }

  int _n = 0;
  Bitset _x;
  Bitset _xbar;
};

enum class ConditionFamily { C_i, C_i_next, C_i_skip, Cbar_i_j, Cbar_i_skip };

inline auto to_string(ConditionFamily f) -> std::string {
  switch (f) {
  case ConditionFamily::C_i: return "C(i)";
  case ConditionFamily::C_i_next: return "C(i,i+1)";
  case ConditionFamily::C_i_skip: return "C(i,i+2)";
  case ConditionFamily::Cbar_i_j: return "Cbar(i,j)";
  case ConditionFamily::Cbar_i_skip: return "Cbar(i,i+2)";
  }
  return "?";
}

struct Violation
{
  ConditionFamily family;
  int i;
  /// Second index for Cbar(i,j); implied (i+1 or i+2) for the other pair families.
  int j;

  friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

struct ConditionReport
{
  std::vector<Violation> violations;
  /// Positions j with x[j] = xbar[j] = 0.
  std::vector<int> bad_indices;
  /// Positions i with xbar[i-1] + x[i] + xbar[i+1] = 0.
  std::vector<int> bar_i_set;

  auto holds() const -> bool { return violations.empty(); }
};

namespace detail {

inline auto require_lemma_range(int n) -> void {
  if (n < 9)
    throw std::domain_error("cycle-prism conditions need n >= 9, got " + std::to_string(n));
}

inline auto sum_c_i(const CodePair & c, int i) -> int { return c.x(i - 1) + c.x(i) + c.xbar(i) + c.x(i + 1); }

inline auto sum_c_next(const CodePair & c, int i) -> int {
  return c.x(i - 1) + c.xbar(i) + c.xbar(i + 1) + c.x(i + 2);
}

inline auto sum_c_skip(const CodePair & c, int i) -> int {
  return c.x(i - 1) + c.x(i) + c.xbar(i) + c.x(i + 2) + c.xbar(i + 2) + c.x(i + 3);
}

inline auto sum_bar_side(const CodePair & c, int i) -> int { return c.xbar(i - 1) + c.x(i) + c.xbar(i + 1); }

inline auto sum_cbar_skip(const CodePair & c, int i) -> int {
  return c.xbar(i - 1) + c.x(i) + c.x(i + 2) + c.xbar(i + 3);
}

inline auto cbar_pair_applies(int n, int i, int j) -> bool {
  const int diff = ((j - i) % n + n) % n;
  return diff != 0 && diff != 2;
}

} // namespace detail

/// Evaluates all five families over every position (and every admissible ordered pair for Cbar(i,j)).
inline auto lemma1_check(const CodePair & code) -> ConditionReport {
  const int n = code.n();
  detail::require_lemma_range(n);
  ConditionReport r;
  for (int i = 1; i <= n; ++i)
    if (detail::sum_c_i(code, i) == 0)
      r.violations.push_back({ConditionFamily::C_i, i, i});
  for (int i = 1; i <= n; ++i)
    if (detail::sum_c_next(code, i) == 0)
      r.violations.push_back({ConditionFamily::C_i_next, i, i % n + 1});
  for (int i = 1; i <= n; ++i)
    if (detail::sum_c_skip(code, i) == 0)
      r.violations.push_back({ConditionFamily::C_i_skip, i, (i + 1) % n + 1});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (detail::cbar_pair_applies(n, i, j) && detail::sum_bar_side(code, i) + detail::sum_bar_side(code, j) == 0)
        r.violations.push_back({ConditionFamily::Cbar_i_j, i, j});
  for (int i = 1; i <= n; ++i)
    if (detail::sum_cbar_skip(code, i) == 0)
      r.violations.push_back({ConditionFamily::Cbar_i_skip, i, (i + 1) % n + 1});

  for (int i = 1; i <= n; ++i) {
    if (code.x(i) == 0 && code.xbar(i) == 0)
      r.bad_indices.push_back(i);
    if (detail::sum_bar_side(code, i) == 0)
      r.bar_i_set.push_back(i);
  }
  return r;
}

/// Same verdict as lemma1_check(code).holds() without building the report.
inline auto lemma1_holds(const CodePair & code) -> bool {
  const int n = code.n();
  detail::require_lemma_range(n);
  int zero_bar_sides = 0;
  for (int i = 1; i <= n; ++i) {
    if (detail::sum_c_i(code, i) == 0 || detail::sum_c_next(code, i) == 0 || detail::sum_c_skip(code, i) == 0 ||
        detail::sum_cbar_skip(code, i) == 0)
      return false;
    zero_bar_sides += detail::sum_bar_side(code, i) == 0 ? 1 : 0;
  }
  if (zero_bar_sides == 0)
    return true;
  if (zero_bar_sides > 1)
    // Two distinct zero positions always have some admissible ordering.
    return false;
  // A single zero position i pairs with itself only (j = i is excluded).
  return true;
}

/**
 * Decides whether the pair is an identifying code of the cycle prism. With at
 * least four complement vertices the condition system alone decides it;
 * otherwise the definitional check is used.
 */
inline auto lemma1_equiv_verify(const CodePair & code, const BallTable & prism_balls) -> bool {
  detail::require_lemma_range(code.n());
  if (code.complement_count() >= 4)
    return lemma1_holds(code);
  return is_identifying_code(prism_balls, code.to_prism_set()).valid;
}

inline auto lemma1_equiv_verify(const CodePair & code) -> bool {
  detail::require_lemma_range(code.n());
  if (code.complement_count() >= 4)
    return lemma1_holds(code);
  return lemma1_equiv_verify(code, BallTable(cycle_prism(code.n()).first, 1));
}

/**
 * The periodic construction: blocks of nine positions contribute
 * x = 111000000 and xbar = 000011110; the n mod 9 trailing positions are all
 * taken on the cycle side. Size n - 2 floor(n/9).
 */
inline auto pattern_code(int n) -> CodePair {
  detail::require_lemma_range(n);
  const int k = n / 9;
  CodePair c(n);
  for (int i = 1; i <= n; ++i) {
    const int r = i % 9;
    const bool in_blocks = i <= 9 * k;
    c.set_x(i, (in_blocks && r >= 1 && r <= 3) || i >= 9 * k + 1);
    c.set_xbar(i, in_blocks && r >= 5 && r <= 8);
  }
  return c;
}

struct UpperBound
{
  int exact;
  Rational analytic;
};

/// Size of pattern_code(n) and the closed-form bound 7n/9 + 16/9.
inline auto upper_bound(int n) -> UpperBound {
  detail::require_lemma_range(n);
  return {n - 2 * (n / 9), Rational(7 * static_cast<std::int64_t>(n) + 16, 9)};
}

/// 7n/9 - 12; negative for small n.
inline auto lower_bound(int n) -> Rational {
  detail::require_lemma_range(n);
  return Rational(7 * static_cast<std::int64_t>(n) - 108, 9);
}

enum class ExchangeOutcome { improved, pattern_detected, not_applicable };

inline auto to_string(ExchangeOutcome o) -> std::string {
  switch (o) {
  case ExchangeOutcome::improved: return "improved";
  case ExchangeOutcome::pattern_detected: return "pattern_detected";
  case ExchangeOutcome::not_applicable: return "not_applicable";
  }
  return "?";
}

enum class ExchangeMove {
  /// C + {v_i, v_{i+1}}, Cbar - {vbar_{i-1}, vbar_{i+2}}
  fill_pair,
  /// C - {v_{i+2}}, Cbar + {vbar_{i+1}}
  shift_right,
  /// C - {v_{i-1}}, Cbar + {vbar_i}; mirror image of shift_right
  shift_left,
};

inline auto to_string(ExchangeMove m) -> std::string {
  switch (m) {
  case ExchangeMove::fill_pair: return "fill_pair";
  case ExchangeMove::shift_right: return "shift_right";
  case ExchangeMove::shift_left: return "shift_left";
  }
  return "?";
}

struct ExchangeResult
{
  ExchangeOutcome outcome = ExchangeOutcome::not_applicable;
  std::optional<CodePair> improved;
  std::optional<ExchangeMove> move;
  /// First position (1-based, wrapped into 1..n) of the detected 9-column window.
  std::optional<int> window_start;
  std::string reason;
};

/// Both rows equal to this over nine consecutive columns.
inline constexpr std::array<int, 9> exchange_window_row{1, 0, 0, 1, 0, 1, 0, 0, 1};

inline auto has_exchange_window(const CodePair & code, int start) -> bool {
  for (int k = 0; k < 9; ++k)
    if (code.x(start + k) != exchange_window_row[k] || code.xbar(start + k) != exchange_window_row[k])
      return false;
  return true;
}

inline auto count_bad_indices(const CodePair & code) -> int {
  int bad = 0;
  for (int i = 1; i <= code.n(); ++i)
    bad += (code.x(i) == 0 && code.xbar(i) == 0) ? 1 : 0;
  return bad;
}

inline auto in_bar_i_set(const CodePair & code, int i) -> bool { return detail::sum_bar_side(code, i) == 0; }

/**
 * Local exchange around a 2x2 block of zeros at columns i, i+1. On a valid
 * code with |Cbar| >= 6 and i-5, i, i+1, i+6 outside the bar-I set, either one
 * of the exchanges yields a code of no larger size with fewer bad columns, or
 * the window 100101001 (both rows) starts at i-1 or i-6.
 */
inline auto lemma2b_exchange(const CodePair & code, int i) -> ExchangeResult {
  const int n = code.n();
  detail::require_lemma_range(n);
  ExchangeResult res;

  if (code.complement_count() < 6) {
    res.reason = "fewer than six complement vertices";
    return res;
  }
  if (code.x(i) || code.x(i + 1) || code.xbar(i) || code.xbar(i + 1)) {
    res.reason = "columns i, i+1 are not all zero";
    return res;
  }
  for (int p : {i - 5, i, i + 1, i + 6})
    if (in_bar_i_set(code, p)) {
      res.reason = "position " + std::to_string(static_cast<int>(code.slot(p)) + 1) + " is in the bar-I set";
      return res;
    }
  if (!lemma1_holds(code)) {
    res.reason = "input is not an identifying code";
    return res;
  }

  const int size = code.size();
  const int bad = count_bad_indices(code);
  auto accept = [&](CodePair candidate, ExchangeMove move) {
    if (candidate.size() <= size && count_bad_indices(candidate) < bad && lemma1_equiv_verify(candidate)) {
      res.outcome = ExchangeOutcome::improved;
      res.improved = std::move(candidate);
      res.move = move;
      return true;
    }
    return false;
  };

  CodePair filled = code;
  filled.set_x(i, true);
  filled.set_x(i + 1, true);
  filled.set_xbar(i - 1, false);
  filled.set_xbar(i + 2, false);
  if (accept(std::move(filled), ExchangeMove::fill_pair))
    return res;

  CodePair right = code;
  right.set_x(i + 2, false);
  right.set_xbar(i + 1, true);
  if (accept(std::move(right), ExchangeMove::shift_right))
    return res;

  CodePair left = code;
  left.set_x(i - 1, false);
  left.set_xbar(i, true);
  if (accept(std::move(left), ExchangeMove::shift_left))
    return res;

  for (int start : {i - 1, i - 6})
    if (has_exchange_window(code, start)) {
      res.outcome = ExchangeOutcome::pattern_detected;
      res.window_start = static_cast<int>(code.slot(start)) + 1;
      return res;
    }

  res.reason = "no exchange validated and no window found";
  return res;
}

} // namespace idprism

#endif
