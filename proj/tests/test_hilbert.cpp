#include <gtest/gtest.h>

#include "support.hpp"
#include "tancone/analysis.hpp"
#include "tancone/hilbert.hpp"

using namespace tancone;

namespace {

// Power series of num(t) / (1 - t)^4 by repeated prefix sums.
std::vector<std::int64_t> series(std::vector<std::int64_t> num, std::size_t n) {
  num.resize(n, 0);
  for (int k = 0; k < 4; ++k)
    for (std::size_t i = 1; i < n; ++i) num[i] += num[i - 1];
  return num;
}

GradedFreeResolution certified(const std::array<std::int64_t, 4>& gens) {
  auto d = solve_structure(NumericalSemigroup(gens));
  auto r = build_resolution(tangent_generators(d), d);
  certify(r);
  return r;
}

}  // namespace

TEST(Hilbert, Binom3) {
  EXPECT_EQ(binom3(2), 0);
  EXPECT_EQ(binom3(3), 1);
  EXPECT_EQ(binom3(6), 20);
  EXPECT_EQ(binom3(-4), 0);
}

TEST(Hilbert, GoldenAgainstPowerSeries) {
  auto r = certified({5, 6, 7, 8});
  auto expected = series({1, 0, -5, 5, 0, -1}, 20);
  EXPECT_EQ(hilbert_numerator(r.twists), (std::vector<std::int64_t>{1, 0, -5, 5, 0, -1}));
  for (std::int64_t i = 0; i < 20; ++i) EXPECT_EQ(hf_from_resolution(r, i), expected[i]) << i;
  EXPECT_EQ(expected[0], 1);
  EXPECT_EQ(expected[1], 4);
  EXPECT_EQ(expected[2], 5);
  EXPECT_EQ(expected[7], 5);
}

TEST(Hilbert, OracleGolden) {
  NumericalSemigroup s{5, 6, 7, 8};
  EXPECT_EQ(s.hilbert_oracle_sequence(6), (std::vector<std::int64_t>{1, 4, 5, 5, 5, 5, 5}));
}

TEST(Hilbert, AllSamplesMatchOracle) {
  for (const auto& s : testing_support::variant_samples()) {
    NumericalSemigroup sg(s.gens);
    auto r = certified(s.gens);
    auto rep = compare_with_oracle(r, sg);
    EXPECT_TRUE(rep.equal) << s.label << s.variant;
    EXPECT_TRUE(rep.nondecreasing);
    EXPECT_EQ(rep.values[0], 1);
    EXPECT_EQ(rep.values[1], 4);
    // The numerator vanishes at t = 1: the Krull dimension is one.
    std::int64_t total = 0;
    for (auto c : hilbert_numerator(r.twists)) total += c;
    EXPECT_EQ(total, 0);
    // Eventually the multiplicity, which is the smallest generator.
    ASSERT_TRUE(rep.stabilization_value.has_value());
    EXPECT_EQ(*rep.stabilization_value, s.gens[0]);
    EXPECT_GE(rep.bound, max_abs_twist(r.twists) + 4);
  }
}

TEST(Hilbert, CorruptedTwistDisagrees) {
  auto r = certified({7, 15, 18, 24});
  r.twists[2][0] -= 1;
  auto rep = compare_with_oracle(r, NumericalSemigroup{7, 15, 18, 24});
  EXPECT_FALSE(rep.equal);
}

TEST(Hilbert, BoundNeverBelowTwistSpan) {
  auto r = certified({5, 6, 7, 8});
  auto rep = compare_with_oracle(r, NumericalSemigroup{5, 6, 7, 8}, 2);
  EXPECT_EQ(rep.bound, 9);
  EXPECT_EQ(rep.values.size(), 10u);
  rep = compare_with_oracle(r, NumericalSemigroup{5, 6, 7, 8}, 40);
  EXPECT_EQ(rep.bound, 40);
}

TEST(Hilbert, UncertifiedResolutionRefused) {
  auto d = solve_structure(NumericalSemigroup{5, 6, 7, 8});
  auto r = build_resolution(tangent_generators(d), d);
  try {
    hf_from_resolution(r, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), Reason::Unverified);
  }
}

TEST(Hilbert, Nondecreasing) {
  std::vector<std::int64_t> up{1, 4, 5, 5}, down{1, 4, 3};
  EXPECT_TRUE(check_nondecreasing(up));
  EXPECT_FALSE(check_nondecreasing(down));
}

TEST(Hilbert, SweepMatchesOracle) {
  for (const auto& p : sweep_families(3)) {
    auto rec = analyze(p.generators());
    if (!rec.accepted()) continue;
    ASSERT_TRUE(rec.hilbert.has_value());
    EXPECT_TRUE(rec.hilbert->equal);
    EXPECT_TRUE(rec.hilbert->nondecreasing);
  }
}
