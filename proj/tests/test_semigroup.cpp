#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tancone/errors.hpp"
#include "tancone/semigroup.hpp"

using namespace tancone;
using testing_support::brute_contains;
using testing_support::brute_order;

namespace {

const std::vector<std::vector<std::int64_t>> kSemigroups = {
    {5, 6, 7, 8}, {4, 5, 6, 7}, {7, 15, 18, 24}, {8, 9, 10, 12}, {6, 7, 10, 11}, {5, 11, 12, 13}, {3, 4, 5},
};

}  // namespace

TEST(Semigroup, MembershipExamples) {
  NumericalSemigroup s{5, 6, 7, 8};
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(9));
  EXPECT_TRUE(s.contains(11));
  EXPECT_THROW(s.contains(-1), Error);
}

TEST(Semigroup, MembershipMatchesExhaustiveSearch) {
  for (const auto& g : kSemigroups) {
    NumericalSemigroup s(g);
    for (std::int64_t n = 0; n <= 3 * g.back() + 20; ++n) EXPECT_EQ(s.contains(n), brute_contains(n, g)) << n;
  }
}

TEST(Semigroup, GapsAndFrobenius) {
  NumericalSemigroup s{5, 6, 7, 8};
  EXPECT_EQ(s.gaps(), (std::vector<std::int64_t>{1, 2, 3, 4, 9}));
  EXPECT_EQ(s.frobenius(), 9);
  EXPECT_EQ(s.gap_count(), 5u);
  for (const auto& g : kSemigroups) {
    NumericalSemigroup t(g);
    auto gaps = t.gaps();
    ASSERT_FALSE(gaps.empty());
    EXPECT_EQ(gaps.back(), t.frobenius());
    for (std::int64_t n = t.frobenius() + 1; n < t.frobenius() + 3 * g.front(); ++n) EXPECT_TRUE(t.contains(n));
  }
}

TEST(Semigroup, SymmetryExamplesAndRestatement) {
  EXPECT_TRUE(NumericalSemigroup({5, 6, 7, 8}).is_symmetric());
  EXPECT_FALSE(NumericalSemigroup({3, 4, 5}).is_symmetric());
  EXPECT_FALSE(NumericalSemigroup({4, 5, 6, 7}).is_symmetric());
  for (const auto& g : kSemigroups) {
    NumericalSemigroup s(g);
    const auto c = s.frobenius();
    bool exactly_one = true;
    for (std::int64_t n = 0; n <= c; ++n)
      exactly_one = exactly_one && (brute_contains(n, g) != brute_contains(c - n, g));
    EXPECT_EQ(s.is_symmetric(), exactly_one);
  }
}

TEST(Semigroup, MinimalGeneration) {
  EXPECT_TRUE(NumericalSemigroup({5, 6, 7, 8}).is_minimally_generated());
  EXPECT_FALSE(NumericalSemigroup({5, 6, 7, 18}).is_minimally_generated());
  EXPECT_FALSE(NumericalSemigroup({5, 5, 6, 7}).is_minimally_generated());
  EXPECT_FALSE(NumericalSemigroup({1, 4, 6, 9}).is_minimally_generated());
}

TEST(Semigroup, ConstructionErrors) {
  try {
    NumericalSemigroup s{2, 4, 6, 8};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), Reason::GcdNotOne);
  }
  EXPECT_THROW(NumericalSemigroup({0, 3, 4, 5}), Error);
  EXPECT_THROW(NumericalSemigroup({-3, 4, 5, 7}), Error);
}

TEST(Semigroup, InputOrderKept) {
  NumericalSemigroup s{8, 5, 7, 6};
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{5, 6, 7, 8}));
  EXPECT_EQ(s.input(), (std::vector<std::int64_t>{8, 5, 7, 6}));
}

TEST(Semigroup, OrderExamples) {
  NumericalSemigroup s{5, 6, 7, 8};
  EXPECT_EQ(s.order(0), 0);
  EXPECT_EQ(s.order(15), 3);
  EXPECT_EQ(s.order(5), 1);
  try {
    s.order(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), Reason::DomainError);
  }
}

TEST(Semigroup, OrderMatchesExhaustiveFactorizations) {
  for (const auto& g : kSemigroups) {
    NumericalSemigroup s(g);
    auto table = s.order_table(4 * g.back());
    for (std::int64_t n = 0; n <= 4 * g.back(); ++n) EXPECT_EQ(table[n], brute_order(n, g)) << n;
  }
}

TEST(Semigroup, OrderIsSuperadditive) {
  std::mt19937 rng(7);
  for (const auto& g : kSemigroups) {
    NumericalSemigroup s(g);
    std::uniform_int_distribution<std::int64_t> pick(0, 6 * g.back());
    for (int trial = 0; trial < 200; ++trial) {
      auto a = pick(rng), b = pick(rng);
      if (!s.contains(a) || !s.contains(b)) continue;
      EXPECT_GE(s.order(a + b), s.order(a) + s.order(b));
    }
  }
}

TEST(Semigroup, HilbertOracleExamples) {
  NumericalSemigroup s{5, 6, 7, 8};
  EXPECT_EQ(s.hilbert_oracle(0), 1);
  EXPECT_EQ(s.hilbert_oracle(1), 4);
  EXPECT_EQ(s.hilbert_oracle(2), 5);
  EXPECT_EQ(s.hilbert_oracle_sequence(6), (std::vector<std::int64_t>{1, 4, 5, 5, 5, 5, 5}));
}

TEST(Semigroup, HilbertOraclePartition) {
  for (const auto& g : kSemigroups) {
    NumericalSemigroup s(g);
    const std::int64_t upto = 8;
    auto seq = s.hilbert_oracle_sequence(upto);
    auto ord = s.order_table(upto * g.back());
    std::int64_t cumulative = 0;
    for (std::int64_t i = 0; i <= upto; ++i) {
      EXPECT_EQ(seq[i], s.hilbert_oracle(i));
      cumulative += seq[i];
      // Every element of order <= i is at most i*n4, so the table counts them all.
      std::int64_t direct = std::count_if(ord.begin(), ord.end(), [&](auto o) { return o >= 0 && o <= i; });
      EXPECT_EQ(cumulative, direct);
    }
  }
}
