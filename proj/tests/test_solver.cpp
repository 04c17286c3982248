#include "idprism/solver.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace idprism;

namespace {

auto with(Strategy s) -> SolverOptions {
  SolverOptions o;
  o.strategy = s;
  return o;
}

} // namespace

TEST(Solver, SixPrismRadiusTwoInfeasible) {
  const auto [g, pi] = cycle_prism(6);
  for (auto s : {Strategy::exhaustive, Strategy::branch_and_bound}) {
    const auto r = solve_min_idcode(g, 2, with(s));
    EXPECT_EQ(r.status, SolverStatus::infeasible);
    ASSERT_TRUE(r.witness.has_value());
    const auto tw = closed_twins(g, 2);
    EXPECT_NE(std::find(tw.begin(), tw.end(), *r.witness), tw.end());
  }
}

TEST(Solver, K2Infeasible) {
  const auto r = solve_min_idcode(complete(2), 1);
  EXPECT_EQ(r.status, SolverStatus::infeasible);
  EXPECT_EQ(r.witness, (Edge{0, 1}));
}

TEST(Solver, NinePrismOptimum) {
  const auto [g, pi] = cycle_prism(9);
  const auto bb = solve_min_idcode(g, 1);
  const auto ex = solve_min_idcode(g, 1, with(Strategy::exhaustive));
  ASSERT_EQ(bb.status, SolverStatus::optimal);
  ASSERT_EQ(ex.status, SolverStatus::optimal);
  EXPECT_EQ(bb.size, 7);
  EXPECT_EQ(ex.size, 7);
  EXPECT_EQ(bb.code, ex.code);
  EXPECT_LE(bb.size, upper_bound(9).exact);
  EXPECT_TRUE(is_identifying_code(g, 1, bb.code).valid);
}

TEST(Solver, SmallPrismsMatchBruteForce) {
  // Subset scan over the definitional matrix: ic of the n-prism for n = 3..8.
  const std::vector<int> expected{4, 4, 4, 5, 6, 6};
  for (int n = 3; n <= 8; ++n) {
    const int brute = oracle::min_code_size(oracle::cycle_prism_matrix(n), 1);
    EXPECT_EQ(brute, expected[static_cast<std::size_t>(n - 3)]) << n;
    const auto r = solve_min_idcode(cycle_prism(n).first, 1);
    ASSERT_EQ(r.status, SolverStatus::optimal);
    EXPECT_EQ(r.size, brute) << n;
  }
}

TEST(Solver, StrategiesAgreeOnRandomGraphs) {
  std::mt19937_64 rng(53);
  int solved = 0;
  for (int k = 0; k < 60; ++k) {
    const int order = 2 + static_cast<int>(rng() % 15);
    const auto g = random_graph(order, 0.2 + 0.1 * static_cast<double>(rng() % 5), rng);
    for (int d = 1; d <= 2; ++d) {
      const auto a = solve_min_idcode(g, d, with(Strategy::exhaustive));
      const auto b = solve_min_idcode(g, d, with(Strategy::branch_and_bound));
      ASSERT_EQ(a.status, b.status);
      if (a.status == SolverStatus::infeasible) {
        EXPECT_EQ(a.witness, b.witness);
        continue;
      }
      ++solved;
      EXPECT_EQ(a.size, b.size);
      EXPECT_EQ(a.code, b.code);
    }
  }
  EXPECT_GT(solved, 20);
}

TEST(Solver, OptimalCodesAreMinimal) {
  std::mt19937_64 rng(59);
  std::vector<Graph> corpus{cycle_prism(7).first, cycle_prism(10).first, cycle(10), path(8)};
  for (int k = 0; k < 10; ++k)
    corpus.push_back(random_graph(5 + static_cast<int>(rng() % 10), 0.3, rng));
  for (const auto & g : corpus) {
    const auto r = solve_min_idcode(g, 1);
    if (r.status != SolverStatus::optimal)
      continue;
    const BallTable balls(g, 1);
    EXPECT_TRUE(is_identifying_code(balls, r.code).valid);
    for (int v = 0; v < g.order(); ++v) {
      Bitset other = r.code;
      if (r.code.test(static_cast<std::size_t>(v))) {
        other.reset(static_cast<std::size_t>(v));
        EXPECT_FALSE(is_identifying_code(balls, other).valid);
      } else {
        other.set(static_cast<std::size_t>(v));
        EXPECT_TRUE(is_identifying_code(balls, other).valid);
      }
    }
  }
}

TEST(Solver, WorkerCountDoesNotChangeResult) {
  const auto g = cycle_prism(11).first;
  const auto base = solve_min_idcode(g, 1);
  for (int workers : {2, 3, 8}) {
    for (std::uint64_t seed : {0ULL, 99ULL}) {
      SolverOptions o;
      o.worker_count = workers;
      o.seed = seed;
      const auto r = solve_min_idcode(g, 1, o);
      EXPECT_EQ(r.status, base.status);
      EXPECT_EQ(r.size, base.size);
      EXPECT_EQ(r.code, base.code);
    }
  }
}

TEST(Solver, SizeCapBelowOptimum) {
  const auto g = cycle_prism(9).first;
  for (auto s : {Strategy::exhaustive, Strategy::branch_and_bound}) {
    auto o = with(s);
    o.size_cap = 6;
    EXPECT_EQ(solve_min_idcode(g, 1, o).status, SolverStatus::cap_exceeded);
    o.size_cap = 7;
    const auto r = solve_min_idcode(g, 1, o);
    EXPECT_EQ(r.status, SolverStatus::optimal);
    EXPECT_EQ(r.size, 7);
  }
}

TEST(Solver, NodeLimit) {
  auto o = with(Strategy::branch_and_bound);
  o.node_limit = 5;
  EXPECT_EQ(solve_min_idcode(cycle_prism(12).first, 1, o).status, SolverStatus::cap_exceeded);
  o.strategy = Strategy::exhaustive;
  EXPECT_EQ(solve_min_idcode(cycle_prism(12).first, 1, o).status, SolverStatus::cap_exceeded);
}

TEST(Solver, RejectsBadOptions) {
  SolverOptions o;
  o.worker_count = 0;
  EXPECT_THROW(solve_min_idcode(cycle(5), 1, o), std::domain_error);
  o.worker_count = 1;
  o.size_cap = 0;
  EXPECT_THROW(solve_min_idcode(cycle(5), 1, o), std::domain_error);
  EXPECT_THROW(solve_min_idcode(cycle(5), 0), std::domain_error);
  EXPECT_THROW(solve_min_idcode(cycle_prism(33).first, 1, with(Strategy::exhaustive)), std::domain_error);
}

TEST(IcTable, SmallRange) {
  const auto rows = ic_table(3, 5, 1);
  ASSERT_EQ(rows.size(), 3U);
  for (const auto & row : rows) {
    EXPECT_EQ(row.result.status, SolverStatus::optimal);
    EXPECT_EQ(row.result.size, 4);
  }
}

TEST(IcTable, RadiusTwoInfeasible) {
  for (const auto & row : ic_table(6, 9, 2))
    EXPECT_EQ(row.result.status, SolverStatus::infeasible) << row.n;
}

TEST(IcTable, RejectsBadRange) {
  EXPECT_THROW(ic_table(2, 5, 1), std::domain_error);
  EXPECT_THROW(ic_table(6, 5, 1), std::domain_error);
}
