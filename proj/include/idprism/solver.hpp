#ifndef IDPRISM_SOLVER_HPP
#define IDPRISM_SOLVER_HPP

/**
 * Exact minimum d-identifying codes.
 *
 * Two strategies share one contract. `exhaustive` walks subsets by increasing
 * cardinality (lexicographic within a cardinality) and tests each against the
 * definition; it is the oracle. `branch_and_bound` works on the hitting-set
 * instance: it branches on the unhit constraint with the fewest remaining
 * candidates and prunes with a greedy packing of pairwise-disjoint unhit
 * constraints. Once the optimum size is known a second, vertex-ordered search
 * recovers the lexicographically smallest optimal code, so both strategies
 * return the same code and the result does not depend on worker_count.
 */

#include "idprism/bitset.hpp"
#include "idprism/cycle_prism.hpp"
#include "idprism/graph.hpp"
#include "idprism/idcode.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace idprism {

enum class Strategy { exhaustive, branch_and_bound };

enum class SolverStatus { optimal, infeasible, cap_exceeded };

inline auto to_string(SolverStatus s) -> std::string {
  switch (s) {
  case SolverStatus::optimal: return "optimal";
  case SolverStatus::infeasible: return "infeasible";
  case SolverStatus::cap_exceeded: return "cap_exceeded";
  }
  return "?";
}

struct SolverOptions
{
  Strategy strategy = Strategy::branch_and_bound;
  /// Largest code size searched for; no code within it gives cap_exceeded.
  std::optional<int> size_cap;
  /// Search-node budget; exhausting it gives cap_exceeded.
  std::optional<std::uint64_t> node_limit;
  int worker_count = 1;
  /// Nonzero shuffles the order in which workers pick up root subproblems.
  std::uint64_t seed = 0;

  auto validate() const -> void {
    if (size_cap && *size_cap < 1)
      throw std::domain_error("size cap must be at least 1");
    if (worker_count < 1)
      throw std::domain_error("worker count must be at least 1");
  }
};

struct SolverResult
{
  SolverStatus status = SolverStatus::cap_exceeded;
  int size = 0;
  Bitset code;
  std::optional<Edge> witness;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

namespace detail {

/// Sorted-index lexicographic order on sets.
inline auto lex_less(const Bitset & a, const Bitset & b) -> bool {
  const auto ia = a.to_indices();
  const auto ib = b.to_indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

/// Definition-based subset walk; vertices are packed into one machine word.
class ExhaustiveSearch
{
public:
  ExhaustiveSearch(const BallTable & balls, const SolverOptions & opts) : _opts(opts) {
    if (balls.order() > 64)
      throw std::domain_error("exhaustive strategy supports at most 64 vertices");
    _order = balls.order();
    for (int u = 0; u < _order; ++u)
      _balls.push_back(balls.ball(u).words().empty() ? 0 : balls.ball(u).words()[0]);
  }

  auto run(SolverResult & res) -> void {
    const int max_k = _opts.size_cap ? std::min(*_opts.size_cap, _order) : _order;
    std::vector<int> comb;
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(_order));
    for (int k = 0; k <= max_k; ++k) {
      comb.resize(static_cast<std::size_t>(k));
      std::iota(comb.begin(), comb.end(), 0);
      while (true) {
        if (_opts.node_limit && res.nodes >= *_opts.node_limit)
          return;
        ++res.nodes;
        std::uint64_t mask = 0;
        for (int v : comb)
          mask |= std::uint64_t{1} << v;
        if (valid(mask, sig)) {
          res.status = SolverStatus::optimal;
          res.size = k;
          res.code = Bitset::from_indices(static_cast<std::size_t>(_order), comb);
          return;
        }
        int p = k - 1;
        while (p >= 0 && comb[static_cast<std::size_t>(p)] == _order - k + p)
          --p;
        if (p < 0)
          break;
        ++comb[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < k; ++q)
          comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
      }
    }
  }

private:
  auto valid(std::uint64_t code, std::vector<std::uint64_t> & sig) const -> bool {
    for (int u = 0; u < _order; ++u) {
      sig[static_cast<std::size_t>(u)] = _balls[static_cast<std::size_t>(u)] & code;
      if (!sig[static_cast<std::size_t>(u)])
        return false;
    }
    std::sort(sig.begin(), sig.end());
    return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
  }

  SolverOptions _opts;
  int _order = 0;
  std::vector<std::uint64_t> _balls;
};

/// Shared state for the constraint-branching search.
class HittingSearch
{
public:
  HittingSearch(const HittingInstance & inst, const SolverOptions & opts)
      : _inst(inst), _opts(opts), _universe(static_cast<std::size_t>(inst.universe)) {}

  /// Smallest size strictly below `bound` reachable, or `bound` if none.
  auto optimum_below(int bound) -> int {
    _best.store(bound);
    Bitset chosen(_universe);
    Bitset excluded(_universe);

    auto root = pick_constraint(chosen, excluded);
    if (!root.has_value())
      return _best.load();
    if (*root == no_constraint) {
      // Nothing to hit: empty set suffices.
      _best.store(std::min(_best.load(), 0));
      return _best.load();
    }
    std::vector<int> candidates = (_inst.constraints[*root]).to_indices();

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (_opts.seed != 0) {
      std::mt19937_64 rng(_opts.seed);
      std::shuffle(order.begin(), order.end(), rng);
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= order.size() || aborted())
          return;
        const std::size_t t = order[k];
        Bitset c = chosen;
        Bitset e = excluded;
        for (std::size_t s = 0; s < t; ++s)
          e.set(static_cast<std::size_t>(candidates[s]));
        c.set(static_cast<std::size_t>(candidates[t]));
        descend(c, e, 1);
      }
    };
    const int workers = std::max(1, std::min<int>(_opts.worker_count, static_cast<int>(order.size())));
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    }
    return _best.load();
  }

  /**
   * Lexicographically smallest hitting set of exactly `k` vertices, deciding
   * vertices in index order with inclusion tried first.
   */
  auto lex_smallest(int k) -> std::optional<Bitset> {
    Bitset chosen(_universe);
    Bitset excluded(_universe);
    if (lex_descend(chosen, excluded, 0, 0, k))
      return chosen;
    return std::nullopt;
  }

  auto nodes() const -> std::uint64_t { return _nodes.load(); }
  auto aborted() const -> bool { return _abort.load(std::memory_order_relaxed); }

private:
  static constexpr std::size_t no_constraint = static_cast<std::size_t>(-1);

  auto count_node() -> bool {
    const auto n = _nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (_opts.node_limit && n > *_opts.node_limit) {
      _abort.store(true);
      return false;
    }
    return true;
  }

  /// Unhit constraint with the fewest candidates (lowest index on ties);
  /// no_constraint if all are hit, nullopt if some unhit one has no candidate.
  auto pick_constraint(const Bitset & chosen, const Bitset & excluded) const -> std::optional<std::size_t> {
    std::size_t best = no_constraint;
    std::size_t best_count = 0;
    for (std::size_t c = 0; c < _inst.constraints.size(); ++c) {
      const Bitset & con = _inst.constraints[c];
      if (con.intersects(chosen))
        continue;
      Bitset cand = con;
      cand.subtract(excluded);
      const std::size_t cnt = cand.count();
      if (cnt == 0)
        return std::nullopt;
      if (best == no_constraint || cnt < best_count) {
        best = c;
        best_count = cnt;
      }
    }
    return best;
  }

  /// Greedy packing of pairwise-disjoint unhit candidate sets, smallest first.
  auto packing_bound(const Bitset & chosen, const Bitset & excluded, const Bitset & undecided_mask) const -> int {
    std::vector<std::pair<std::size_t, Bitset>> open;
    for (const Bitset & con : _inst.constraints) {
      if (con.intersects(chosen))
        continue;
      Bitset cand = con;
      cand.subtract(excluded);
      cand &= undecided_mask;
      open.emplace_back(cand.count(), std::move(cand));
    }
    std::stable_sort(open.begin(), open.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
    Bitset used(_universe);
    int bound = 0;
    for (const auto & [cnt, cand] : open) {
      if (cnt == 0)
        return static_cast<int>(_universe) + 1;
      if (!cand.intersects(used)) {
        used |= cand;
        ++bound;
      }
    }
    return bound;
  }

  auto descend(Bitset & chosen, Bitset & excluded, int size) -> void {
    if (!count_node())
      return;
    if (size >= _best.load())
      return;
    auto pick = pick_constraint(chosen, excluded);
    if (!pick.has_value())
      return;
    if (*pick == no_constraint) {
      int cur = _best.load();
      while (size < cur && !_best.compare_exchange_weak(cur, size)) {
      }
      return;
    }
    Bitset all(_universe);
    all.set_all();
    if (size + packing_bound(chosen, excluded, all) >= _best.load())
      return;

    const auto candidates = [&] {
      Bitset c = _inst.constraints[*pick];
      c.subtract(excluded);
      return c.to_indices();
    }();
    Bitset saved = excluded;
    for (int v : candidates) {
      if (aborted())
        break;
      chosen.set(static_cast<std::size_t>(v));
      descend(chosen, excluded, size + 1);
      chosen.reset(static_cast<std::size_t>(v));
      excluded.set(static_cast<std::size_t>(v));
    }
    excluded = std::move(saved);
  }

  auto lex_descend(Bitset & chosen, Bitset & excluded, std::size_t next, int size, int k) -> bool {
    if (!count_node())
      return false;
    Bitset undecided(_universe);
    for (std::size_t v = next; v < _universe; ++v)
      undecided.set(v);
    const int need = packing_bound(chosen, excluded, undecided);
    if (need == 0)
      return size <= k;
    if (size + need > k || next >= _universe)
      return false;

    chosen.set(next);
    if (lex_descend(chosen, excluded, next + 1, size + 1, k))
      return true;
    chosen.reset(next);
    if (aborted())
      return false;
    excluded.set(next);
    if (lex_descend(chosen, excluded, next + 1, size, k))
      return true;
    excluded.reset(next);
    return false;
  }

  const HittingInstance & _inst;
  SolverOptions _opts;
  std::size_t _universe;
  std::atomic<int> _best{0};
  std::atomic<std::uint64_t> _nodes{0};
  std::atomic<bool> _abort{false};
};

} // namespace detail

inline auto solve_min_idcode(const Graph & g, int d, const SolverOptions & opts = {}) -> SolverResult {
  opts.validate();
  const auto start = std::chrono::steady_clock::now();
  const BallTable balls(g, d);
  SolverResult res;
  res.code = Bitset(static_cast<std::size_t>(g.order()));

  auto finish = [&] {
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  };

  const auto twins = closed_twins(balls);
  if (!twins.empty()) {
    res.status = SolverStatus::infeasible;
    res.witness = twins.front();
    return finish();
  }

  if (opts.strategy == Strategy::exhaustive) {
    detail::ExhaustiveSearch search(balls, opts);
    search.run(res);
    return finish();
  }

  const HittingInstance inst = hitting_instance(balls);
  const Bitset greedy = greedy_code(inst);
  const int greedy_size = static_cast<int>(greedy.count());
  const int cap = opts.size_cap.value_or(g.order());

  detail::HittingSearch search(inst, opts);
  // Look for anything strictly better than min(greedy, cap + 1).
  const int bound = std::min(greedy_size, cap + 1);
  const int found = search.optimum_below(bound);
  if (search.aborted()) {
    res.nodes = search.nodes();
    return finish();
  }
  const int optimum = found < bound ? found : greedy_size;
  if (optimum > cap) {
    res.nodes = search.nodes();
    return finish();
  }

  auto code = search.lex_smallest(optimum);
  res.nodes = search.nodes();
  if (!code) {
    if (search.aborted())
      return finish();
    throw std::logic_error("optimal size found but no code of that size recovered");
  }
  res.status = SolverStatus::optimal;
  res.size = optimum;
  res.code = std::move(*code);
  return finish();
}

struct IcRow
{
  int n;
  SolverResult result;
};

/**
 * Minimum d-identifying codes of the cycle prisms for n in [n_from, n_to].
 * For d = 1 and n >= 9 every optimum is checked against 7n/9 - 12 <= ic and
 * ic <= n - 2 floor(n/9); a violation throws std::logic_error.
 */
inline auto ic_table(int n_from, int n_to, int d, const SolverOptions & opts = {}) -> std::vector<IcRow> {
  if (n_from < 3 || n_to < n_from)
    throw std::domain_error("ic table range must satisfy 3 <= from <= to");
  std::vector<IcRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    IcRow row{n, solve_min_idcode(cycle_prism(n).first, d, opts)};
    if (d == 1 && n >= 9 && row.result.status == SolverStatus::optimal) {
      const int ic = row.result.size;
      if (Rational(ic) < lower_bound(n) || ic > upper_bound(n).exact)
        throw std::logic_error("ic of cycle prism " + std::to_string(n) + " = " + std::to_string(ic) +
                               " falls outside the proven bounds");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace idprism

#endif
