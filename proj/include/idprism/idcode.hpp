#ifndef IDPRISM_IDCODE_HPP
#define IDPRISM_IDCODE_HPP

/**
 * Definitional verification of d-identifying codes and the equivalent
 * hitting-set formulation: a set C is a d-identifying code iff it meets every
 * ball N^{<=d}[u] and every symmetric difference ball(u) ^ ball(v), u != v.
 */

#include "idprism/bitset.hpp"
#include "idprism/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace idprism {

/// Raised when an operation needs a twin-free instance.
class InfeasibleError : public std::runtime_error
{
public:
  InfeasibleError(const std::string & what, Edge witness)
      : std::runtime_error(what), _witness(witness) {}

  auto witness() const -> Edge { return _witness; }

private:
  Edge _witness;
};

enum class FailureKind { empty_ball, unseparated };

struct VerificationFailure
{
  FailureKind kind;
  /// One vertex for empty_ball, the pair u < v for unseparated.
  std::vector<int> vertices;

  friend auto operator==(const VerificationFailure &, const VerificationFailure &) -> bool = default;
};

struct VerificationReport
{
  bool valid = true;
  std::optional<VerificationFailure> failure;
};

inline auto to_string(FailureKind k) -> std::string {
  return k == FailureKind::empty_ball ? "empty-ball" : "unseparated";
}

/**
 * Checks the definition directly. An empty ball intersection is reported
 * first (smallest vertex); otherwise the lexicographically smallest pair with
 * equal intersections.
 */
inline auto is_identifying_code(const BallTable & balls, const Bitset & code) -> VerificationReport {
  const int order = balls.order();
  if (code.size() != static_cast<std::size_t>(order))
    throw std::domain_error("code size does not match graph order");
  const std::size_t nw = Bitset::words_for(static_cast<std::size_t>(order));

  std::vector<Bitset::Word> flat(static_cast<std::size_t>(order) * nw);
  auto row = [&](int u) { return std::span<const Bitset::Word>(flat.data() + static_cast<std::size_t>(u) * nw, nw); };

  const auto cw = code.words();
  for (int u = 0; u < order; ++u) {
    const auto bw = balls.ball(u).words();
    bool empty = true;
    for (std::size_t k = 0; k < nw; ++k) {
      flat[static_cast<std::size_t>(u) * nw + k] = bw[k] & cw[k];
      empty = empty && flat[static_cast<std::size_t>(u) * nw + k] == 0;
    }
    if (empty)
      return {false, VerificationFailure{FailureKind::empty_ball, {u}}};
  }

  std::vector<int> idx(static_cast<std::size_t>(order));
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](int a, int b) {
    auto ra = row(a);
    auto rb = row(b);
    if (auto c = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end()); c != 0)
      return c < 0;
    return a < b;
  };
  std::sort(idx.begin(), idx.end(), less);

  std::optional<Edge> best;
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    auto ra = row(idx[k]);
    auto rb = row(idx[k + 1]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) {
      // idx[k] is the smallest member of its run only if the previous differs.
      if (k > 0) {
        auto rp = row(idx[k - 1]);
        if (std::equal(rp.begin(), rp.end(), ra.begin()))
          continue;
      }
      Edge e{idx[k], idx[k + 1]};
      if (!best || e < *best)
        best = e;
    }
  }
  if (best)
    return {false, VerificationFailure{FailureKind::unseparated, {best->first, best->second}}};
  return {true, std::nullopt};
}

inline auto is_identifying_code(const Graph & g, int d, const Bitset & code) -> VerificationReport {
  return is_identifying_code(BallTable(g, d), code);
}

struct HittingInstance
{
  int universe = 0;
  std::vector<Bitset> constraints;
  std::vector<Edge> infeasible_pairs;

  auto feasible() const -> bool { return infeasible_pairs.empty(); }

  /// True iff `code` meets every constraint (twins are not considered).
  auto hit_by(const Bitset & code) const -> bool {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Bitset & c) { return c.intersects(code); });
  }

  /// Equivalent to the definitional check.
  auto accepts(const Bitset & code) const -> bool { return feasible() && hit_by(code); }
};

/**
 * Domination constraints (one per vertex) followed by separation constraints
 * (one per pair with nonempty symmetric difference), identical sets merged
 * keeping the first occurrence. With `drop_supersets`, constraints that
 * strictly contain another constraint are removed as well.
 */
inline auto hitting_instance(const BallTable & balls, bool drop_supersets = false) -> HittingInstance {
  HittingInstance inst;
  inst.universe = balls.order();
  std::set<Bitset> seen;
  auto add = [&](Bitset c) {
    if (seen.insert(c).second)
      inst.constraints.push_back(std::move(c));
  };
  for (int u = 0; u < balls.order(); ++u)
    add(balls.ball(u));
  for (int u = 0; u < balls.order(); ++u)
    for (int v = u + 1; v < balls.order(); ++v) {
      Bitset diff = balls.ball(u) ^ balls.ball(v);
      if (diff.none())
        inst.infeasible_pairs.emplace_back(u, v);
      else
        add(std::move(diff));
    }

  if (drop_supersets) {
    std::vector<Bitset> kept;
    for (std::size_t a = 0; a < inst.constraints.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < inst.constraints.size() && !dominated; ++b)
        dominated = a != b && inst.constraints[b].is_subset_of(inst.constraints[a]);
      if (!dominated)
        kept.push_back(inst.constraints[a]);
    }
    inst.constraints = std::move(kept);
  }
  return inst;
}

inline auto hitting_instance(const Graph & g, int d, bool drop_supersets = false) -> HittingInstance {
  return hitting_instance(BallTable(g, d), drop_supersets);
}

/// Greedy max-coverage cover; ties go to the lowest vertex.
inline auto greedy_code(const HittingInstance & inst) -> Bitset {
  if (!inst.feasible())
    throw InfeasibleError("instance has closed twins; no identifying code exists", inst.infeasible_pairs.front());
  const auto universe = static_cast<std::size_t>(inst.universe);
  Bitset code(universe);
  std::vector<char> hit(inst.constraints.size(), 0);
  std::size_t remaining = inst.constraints.size();
  while (remaining > 0) {
    std::vector<std::size_t> gain(universe, 0);
    for (std::size_t c = 0; c < inst.constraints.size(); ++c)
      if (!hit[c])
        inst.constraints[c].for_each([&](std::size_t v) { ++gain[v]; });
    const auto best = static_cast<std::size_t>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    code.set(best);
    for (std::size_t c = 0; c < inst.constraints.size(); ++c)
      if (!hit[c] && inst.constraints[c].test(best)) {
        hit[c] = 1;
        --remaining;
      }
  }
  return code;
}

} // namespace idprism

#endif
