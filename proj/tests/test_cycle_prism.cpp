#include "idprism/cycle_prism.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace idprism;

namespace {

auto definitional(const CodePair & c) -> bool {
  return is_identifying_code(cycle_prism(c.n()).first, 1, c.to_prism_set()).valid;
}

auto count_family(const ConditionReport & r, ConditionFamily f) -> std::size_t {
  return static_cast<std::size_t>(
      std::count_if(r.violations.begin(), r.violations.end(), [&](const Violation & v) { return v.family == f; }));
}

} // namespace

TEST(CodePair, PrismSetRoundTrip) {
  const auto c = CodePair::from_strings("110000101", "000111000");
  EXPECT_EQ(c.size(), 7);
  EXPECT_EQ(CodePair::from_prism_set(9, c.to_prism_set()), c);
  EXPECT_EQ(c.x(0), c.x(9));
  EXPECT_EQ(c.x(10), c.x(1));
  EXPECT_THROW(CodePair::from_strings("1102", "0000"), std::invalid_argument);
  EXPECT_THROW(CodePair::from_strings("110", "0000"), std::invalid_argument);
}

TEST(Lemma1Check, PatternHasNoViolations) {
  const auto r = lemma1_check(pattern_code(9));
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.bad_indices, (std::vector<int>{4, 9}));
}

TEST(Lemma1Check, AllZeroViolatesEveryDomination) {
  const auto r = lemma1_check(CodePair(9));
  EXPECT_EQ(count_family(r, ConditionFamily::C_i), 9U);
  EXPECT_EQ(r.bad_indices.size(), 9U);
  EXPECT_EQ(r.bar_i_set.size(), 9U);
}

TEST(Lemma1Check, AlternatingCodeFailsSkipSeparation) {
  const auto c = CodePair::from_strings("101010101", "010101010");
  const auto r = lemma1_check(c);
  const Violation at2{ConditionFamily::Cbar_i_skip, 2, 4};
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), at2), r.violations.end());
  EXPECT_FALSE(definitional(c));
}

TEST(Lemma1Check, RejectsSmallN) {
  EXPECT_THROW(lemma1_check(CodePair(8)), std::domain_error);
  EXPECT_THROW(lemma1_equiv_verify(CodePair(8)), std::domain_error);
  EXPECT_THROW(pattern_code(8), std::domain_error);
  EXPECT_THROW(upper_bound(8), std::domain_error);
  EXPECT_THROW(lower_bound(3), std::domain_error);
}

TEST(Lemma1Check, FastVerdictMatchesReport) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 20000; ++k) {
    const int n = 9 + static_cast<int>(rng() % 8);
    CodePair c(n);
    for (int i = 1; i <= n; ++i) {
      c.set_x(i, rng() % 2);
      c.set_xbar(i, rng() % 2);
    }
    ASSERT_EQ(lemma1_holds(c), lemma1_check(c).holds());
  }
}

TEST(Lemma1EquivVerify, PatternCodes) {
  for (int n = 9; n <= 20; ++n)
    EXPECT_TRUE(lemma1_equiv_verify(pattern_code(n))) << n;
}

TEST(Lemma1EquivVerify, FallsBackBelowFourComplementVertices) {
  const auto c = CodePair::from_strings("111111111", "000000000");
  // vbar_i sees {v_i}, v_i sees {v_{i-1}, v_i, v_{i+1}}: all distinct.
  EXPECT_EQ(lemma1_equiv_verify(c), definitional(c));
  EXPECT_TRUE(lemma1_equiv_verify(c));
}

TEST(Lemma1EquivVerify, AllComplementVertices) {
  const auto c = CodePair::from_strings("000000000", "111111111");
  EXPECT_TRUE(lemma1_check(c).holds());
  EXPECT_TRUE(lemma1_equiv_verify(c));
  EXPECT_TRUE(definitional(c));
}

TEST(Lemma1EquivVerify, RandomAgreementWithDefinition) {
  std::mt19937_64 rng(43);
  for (int n : {13, 16, 21}) {
    const auto [g, pi] = cycle_prism(n);
    const BallTable balls(g, 1);
    for (int k = 0; k < 20000; ++k) {
      CodePair c(n);
      for (int i = 1; i <= n; ++i) {
        c.set_x(i, rng() % 100 < 60);
        c.set_xbar(i, rng() % 100 < 50);
      }
      ASSERT_EQ(lemma1_equiv_verify(c, balls), is_identifying_code(balls, c.to_prism_set()).valid);
    }
  }
}

TEST(PatternCode, NineColumns) {
  const auto c = pattern_code(9);
  EXPECT_EQ(c.x_string(), "111000000");
  EXPECT_EQ(c.xbar_string(), "000011110");
  EXPECT_EQ(c.size(), 7);
}

TEST(PatternCode, TrailingColumnsGoToCycleSide) {
  const auto c = pattern_code(11);
  EXPECT_EQ(c.x_string(), "11100000011");
  EXPECT_EQ(c.xbar_string(), "00001111000");
  EXPECT_EQ(c.size(), 9);
}

TEST(PatternCode, EighteenColumns) { EXPECT_EQ(pattern_code(18).size(), 14); }

TEST(PatternCode, ValidAgainstIndependentOracle) {
  for (int n = 9; n <= 14; ++n) {
    const auto c = pattern_code(n);
    std::set<int> code;
    for (int v : c.to_prism_set().to_indices())
      code.insert(v);
    EXPECT_TRUE(oracle::is_identifying(oracle::cycle_prism_matrix(n), 1, code)) << n;
  }
}

TEST(Bounds, UpperBoundValues) {
  EXPECT_EQ(upper_bound(9).exact, 7);
  EXPECT_EQ(upper_bound(9).analytic, Rational(79, 9));
  EXPECT_EQ(upper_bound(90).exact, 70);
  EXPECT_EQ(upper_bound(90).analytic, Rational(646, 9));
  EXPECT_EQ(upper_bound(10).exact, 8);
  EXPECT_EQ(upper_bound(10).analytic, Rational(86, 9));
  for (int n = 9; n <= 500; ++n)
    EXPECT_LE(Rational(upper_bound(n).exact), upper_bound(n).analytic);
}

TEST(Bounds, LowerBoundValues) {
  EXPECT_EQ(lower_bound(9), Rational(-5));
  EXPECT_EQ(lower_bound(90), Rational(58));
  EXPECT_EQ(lower_bound(108), Rational(72));
}

TEST(Lemma2bExchange, HypothesisAbsent) {
  // The pattern has no 2x2 zero block at columns 4,5.
  const auto r = lemma2b_exchange(pattern_code(9), 4);
  EXPECT_EQ(r.outcome, ExchangeOutcome::not_applicable);
  EXPECT_FALSE(r.reason.empty());
  // Too few complement vertices.
  EXPECT_EQ(lemma2b_exchange(CodePair::from_strings("111111111", "000000000"), 1).outcome,
            ExchangeOutcome::not_applicable);
}

TEST(Lemma2bExchange, WindowDetected) {
  // Both rows 100101001 on columns 1..9 and no exchange at i = 2 validates.
  const auto c = CodePair::from_strings("1001010010001", "1001010011100");
  ASSERT_TRUE(definitional(c));
  const auto r = lemma2b_exchange(c, 2);
  EXPECT_EQ(r.outcome, ExchangeOutcome::pattern_detected);
  EXPECT_EQ(r.window_start, 1);
  EXPECT_FALSE(r.improved.has_value());
}

TEST(Lemma2bExchange, MirroredShiftIsNeeded) {
  const auto c = CodePair::from_strings("0100101001", "0101111001");
  ASSERT_TRUE(definitional(c));
  const auto r = lemma2b_exchange(c, 8);
  ASSERT_EQ(r.outcome, ExchangeOutcome::improved);
  EXPECT_EQ(r.move, ExchangeMove::shift_left);
  EXPECT_FALSE(has_exchange_window(c, 7));
  EXPECT_FALSE(has_exchange_window(c, 2));
  EXPECT_TRUE(definitional(*r.improved));
}

TEST(Lemma2bExchange, ImprovementsRespectSizeAndBadColumns) {
  std::mt19937_64 rng(47);
  int improved = 0;
  for (int k = 0; k < 400000 && improved < 300; ++k) {
    const int n = 9 + static_cast<int>(rng() % 8);
    CodePair c(n);
    for (int i = 1; i <= n; ++i) {
      c.set_x(i, rng() % 100 < 55);
      c.set_xbar(i, rng() % 100 < 45);
    }
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    c.set_x(i, false);
    c.set_x(i + 1, false);
    c.set_xbar(i, false);
    c.set_xbar(i + 1, false);
    const auto r = lemma2b_exchange(c, i);
    if (r.outcome != ExchangeOutcome::improved)
      continue;
    ++improved;
    EXPECT_LE(r.improved->size(), c.size());
    EXPECT_LT(count_bad_indices(*r.improved), count_bad_indices(c));
    EXPECT_TRUE(definitional(*r.improved));
  }
  EXPECT_GT(improved, 100);
}
