#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tancone/errors.hpp"
#include "tancone/expr.hpp"
#include "tancone/poly.hpp"

using namespace tancone;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), n(0, 4);
  Poly p;
  for (int t = n(rng); t > 0; --t) p.add_term({std::uint32_t(e(rng)), std::uint32_t(e(rng)), std::uint32_t(e(rng)),
                                               std::uint32_t(e(rng))},
                                              c(rng));
  return p;
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng);
  return m;
}

}  // namespace

TEST(Poly, Arithmetic) {
  EXPECT_EQ(P("x1-x2") + P("x2"), P("x1"));
  EXPECT_TRUE((P("x2^2-x1*x3") * P("0")).is_zero());
  EXPECT_EQ(P("x2*x3-x1*x4") * P("x2*x3+x1*x4"), P("x2^2*x3^2-x1^2*x4^2"));
  EXPECT_EQ(-P("x1-x2"), P("x2-x1"));
  EXPECT_EQ(P("x1+x2").pow(3), P("x1^3+3*x1^2*x2+3*x1*x2^2+x2^3"));
  EXPECT_EQ(P("x1") * Coeff(0), Poly());
}

TEST(Poly, TermByTermProductOracle) {
  // (x2x3 - x1x4)(x2x3 + x1x4): the four products, two of which cancel.
  Poly expected;
  expected.add_term({0, 2, 2, 0}, 1);
  expected.add_term({1, 1, 1, 1}, 1);
  expected.add_term({1, 1, 1, 1}, -1);
  expected.add_term({2, 0, 0, 2}, -1);
  EXPECT_EQ(expected.term_count(), 2u);
  EXPECT_EQ(P("x2*x3-x1*x4") * P("x2*x3+x1*x4"), expected);
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Poly, CanonicalRendering) {
  EXPECT_EQ(P("x2^2-x1*x3").to_string(), "-x1*x3 + x2^2");
  EXPECT_EQ(P("x3*x4").to_string(), "x3*x4");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("2*x1^3-1").to_string(), "2*x1^3 - 1");
  EXPECT_EQ(P("x4+x1").to_string(), "x1 + x4");
}

TEST(Poly, LowestDegreeForm) {
  EXPECT_EQ(lowest_degree_form(P("x2^2-x1*x3")), P("x2^2-x1*x3"));
  EXPECT_EQ(lowest_degree_form(P("x2^3-x1^3*x4")), P("x2^3"));
  EXPECT_EQ(lowest_degree_form(P("x1^3-x3*x4")), P("-x3*x4"));
  try {
    lowest_degree_form(Poly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), Reason::DomainError);
  }
}

TEST(Poly, LowestFormOfSymbolicBinomial) {
  AlphaValues a{{"a2", 3}, {"a21", 2}, {"a24", 2}};
  EXPECT_EQ(lowest_degree_form(instantiate_entry("x2^a2-x1^a21*x4^a24", a)), P("x2^3"));
}

TEST(Poly, Homogeneity) {
  EXPECT_EQ(is_homogeneous(P("x3*x4")), 2u);
  EXPECT_EQ(is_homogeneous(P("x2^2-x1*x3")), 2u);
  EXPECT_EQ(is_homogeneous(P("x1^3-x3*x4")), std::nullopt);
  EXPECT_THROW(is_homogeneous(Poly()), Error);
}

TEST(Poly, WeightSubstitution) {
  // x2^2 - x1*x3 vanishes under x_j -> t^{n_j} for (5,6,7,8).
  EXPECT_TRUE(P("x2^2-x1*x3").substitute_weights({5, 6, 7, 8}).empty());
  EXPECT_EQ(P("x1^2-x2").substitute_weights({5, 6, 7, 8}).size(), 2u);
}

TEST(PolyMatrix, ProductShapesAndZero) {
  PolyMatrix a(1, 5), b(5, 5);
  for (std::size_t i = 0; i < 5; ++i) b(i, i) = Poly::constant(1);
  a(0, 2) = P("x1");
  EXPECT_EQ(a * b, a);
  EXPECT_EQ((a * b).rows(), 1u);
  EXPECT_EQ((a * b).cols(), 5u);
  PolyMatrix c(4, 2);
  try {
    a* c;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), Reason::DimensionMismatch);
  }
  EXPECT_TRUE(PolyMatrix(3, 3).is_zero());
  EXPECT_FALSE(a.is_zero());
}

TEST(PolyMatrix, Minors) {
  PolyMatrix m = instantiate_matrix("x1, x2; x3, x4", {});
  std::vector<std::size_t> all{0, 1};
  EXPECT_EQ(minor(m, all, all), P("x1*x4-x2*x3"));
  PolyMatrix z = instantiate_matrix("x1, x2, x3; 0, 0, 0; x4, x1, x2", {});
  std::vector<std::size_t> rows{0, 1}, cols{0, 2};
  EXPECT_TRUE(minor(z, rows, cols).is_zero());
  std::vector<std::size_t> bad{0, 5};
  EXPECT_THROW(minor(z, bad, cols), Error);
}

TEST(PolyMatrix, AllMinorsVanish) {
  PolyMatrix outer = instantiate_matrix("x1*x3, x1*x4; x2*x3, x2*x4", {});
  EXPECT_TRUE(all_minors_vanish(outer, 2));
  PolyMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id(i, i) = Poly::constant(1);
  EXPECT_FALSE(all_minors_vanish(id, 5));
}

TEST(PolyMatrix, CofactorMatchesPermutationExpansion) {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto m3 = random_matrix(rng, 3);
    EXPECT_EQ(determinant(m3), testing_support::leibniz_det(m3));
  }
  for (int t = 0; t < 10; ++t) {
    auto m4 = random_matrix(rng, 4);
    EXPECT_EQ(determinant(m4), testing_support::leibniz_det(m4));
  }
}

TEST(Factored, ParseAndExpand) {
  AlphaValues a{{"a2", 2}, {"a32", 1}, {"a21", 1}, {"a24", 1}};
  auto f = instantiate_factored("-x2^a32*(x2^a2-x1^a21*x4^a24)^2", a);
  EXPECT_EQ(f.sign(), -1);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.expand(), -(P("x2") * P("x2^2-x1*x4").pow(2)));
  auto g = instantiate_factored("x3^a3-x2^a32*x4^a34", {{"a3", 2}, {"a32", 1}, {"a34", 1}});
  EXPECT_EQ(g.factors().size(), 1u);
  EXPECT_EQ(g.expand(), P("x3^2-x2*x4"));
  EXPECT_THROW(instantiate_factored("x1*x2-x1*x3", {}), Error);  // not primitive
  EXPECT_THROW(instantiate_factored("x1+x2+x3", {}), Error);
}

TEST(Factored, StructuralCoprimality) {
  auto F = [](const char* s, const AlphaValues& a = {}) { return instantiate_factored(s, a); };
  EXPECT_TRUE(structurally_coprime(F("x2^3"), F("x3^4")).coprime);
  AlphaValues a{{"a32", 1}, {"a2", 3}, {"a21", 2}, {"a24", 1}, {"a3", 2}, {"a13", 1}, {"a14", 1}};
  EXPECT_TRUE(structurally_coprime(F("x2^a32*(x2^a2-x1^a21*x4^a24)", a), F("x3^(a3+2*a13)*x4^a14", a)).coprime);
  EXPECT_FALSE(structurally_coprime(F("x2^2-x1*x3"), F("x2^2-x1*x3")).coprime);
  EXPECT_FALSE(structurally_coprime(F("x2^2-x1*x3"), F("-(x1*x3-x2^2)")).coprime);
  EXPECT_FALSE(structurally_coprime(F("x2*x4"), F("x4^3")).coprime);
  auto flagged = structurally_coprime(F("x2^2-x1*x3"), F("x3^2-x1*x4"));
  EXPECT_TRUE(flagged.coprime);
  EXPECT_TRUE(flagged.flagged);
}
