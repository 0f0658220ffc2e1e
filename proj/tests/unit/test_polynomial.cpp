#include <gtest/gtest.h>

#include "qes/error.hpp"
#include "qes/polynomial.hpp"
#include "random_poly.hpp"

using namespace qes;
using qes::testing::z;
using qes::testing::zc;

namespace {

// p(z) = 4z^3 - g2 z - g3 in variable k of an nvars ring.
ZPolynomial cubic(std::size_t nvars, std::size_t k, const Rational& g2, const Rational& g3) {
  return poly_pow(z(nvars, k), 3) * Rational(4) - z(nvars, k) * g2 - zc(nvars, g3);
}

}  // namespace

TEST(Polynomial, GrlexOrder) {
  GrlexGreater greater;
  EXPECT_TRUE(greater(Monomial{2, 0}, Monomial{1, 1}));
  EXPECT_TRUE(greater(Monomial{1, 1}, Monomial{0, 2}));
  EXPECT_TRUE(greater(Monomial{0, 2}, Monomial{1, 0}));
  EXPECT_FALSE(greater(Monomial{1, 0}, Monomial{1, 0}));
  const ZPolynomial p = z(2, 1) * z(2, 1) + z(2, 0) + z(2, 0) * z(2, 1);
  EXPECT_EQ(p.leading_term().first, (Monomial{1, 1}));
}

TEST(Polynomial, Add) {
  EXPECT_TRUE((z(2, 0) + (-z(2, 0))).is_zero());
  const ZPolynomial s = (z(2, 0) + z(2, 1)) + z(2, 0) * z(2, 1);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.coefficient(Monomial{1, 1}), Rational(1));

  const ZPolynomial sum = poly_add(cubic(2, 0, 12, 8), cubic(2, 1, 12, 8));
  ZPolynomial expected(2);
  expected.add_term(Monomial{3, 0}, 4);
  expected.add_term(Monomial{0, 3}, 4);
  expected.add_term(Monomial{1, 0}, -12);
  expected.add_term(Monomial{0, 1}, -12);
  expected.add_term(Monomial{0, 0}, -16);
  EXPECT_EQ(sum, expected);
  EXPECT_THROW(poly_add(z(2, 0), z(3, 0)), DimensionMismatch);
}

TEST(Polynomial, Multiply) {
  const ZPolynomial diff = z(2, 0) - z(2, 1);
  const ZPolynomial sum = z(2, 0) + z(2, 1);
  EXPECT_EQ(poly_mul(diff, sum), z(2, 0) * z(2, 0) - z(2, 1) * z(2, 1));
  const ZPolynomial p = cubic(2, 0, 3, 5);
  EXPECT_EQ(poly_mul(zc(2, 1), p), p);
  EXPECT_EQ(poly_mul(sum, sum), z(2, 0) * z(2, 0) + z(2, 0) * z(2, 1) * Rational(2) + z(2, 1) * z(2, 1));
}

TEST(Polynomial, Derivative) {
  const ZPolynomial p = cubic(1, 0, Rational(7, 3), Rational(-2));
  EXPECT_EQ(poly_diff(p, 0), z(1, 0) * z(1, 0) * Rational(12) - zc(1, Rational(7, 3)));
  EXPECT_TRUE(poly_diff(poly_pow(z(2, 1), 3), 0).is_zero());
  EXPECT_EQ(poly_diff(z(2, 0) * z(2, 0) * z(2, 1), 0), z(2, 0) * z(2, 1) * Rational(2));
  EXPECT_THROW(poly_diff(p, 1), DimensionMismatch);
}

TEST(Polynomial, DivideExact) {
  const ZPolynomial diff = z(2, 0) - z(2, 1);
  EXPECT_EQ(poly_divide_exact(z(2, 0) * z(2, 0) - z(2, 1) * z(2, 1), diff), z(2, 0) + z(2, 1));

  // (p(z1) - p(z2)) / (z1 - z2) for g2 = 12, g3 = 8; checked by multiplying back.
  const ZPolynomial q = poly_divide_exact(cubic(2, 0, 12, 8) - cubic(2, 1, 12, 8), diff);
  const ZPolynomial expected =
      (z(2, 0) * z(2, 0) + z(2, 0) * z(2, 1) + z(2, 1) * z(2, 1)) * Rational(4) - zc(2, 12);
  EXPECT_EQ(q, expected);
  EXPECT_EQ(q * diff, cubic(2, 0, 12, 8) - cubic(2, 1, 12, 8));

  EXPECT_THROW(poly_divide_exact(z(2, 0), diff), NonZeroRemainder);
  EXPECT_THROW(poly_divide_exact(z(2, 0), ZPolynomial(2)), Error);
}

TEST(Polynomial, Evaluate) {
  const std::vector<Rational> two{Rational(2)};
  EXPECT_EQ(poly_eval(cubic(1, 0, 12, 8), two), Rational(0));
  const ZPolynomial p = cubic(2, 1, 5, 9) + z(2, 0);
  const std::vector<Rational> origin{Rational(0), Rational(0)};
  EXPECT_EQ(poly_eval(p, origin), Rational(-9));
  const std::vector<Rational> point{Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(poly_eval(z(2, 0) + z(2, 1), point), Rational(5, 6));
  EXPECT_THROW(poly_eval(p, two), DimensionMismatch);
}

TEST(PolynomialProperty, RingAxiomsAndDivision) {
  qes::testing::Generator gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const ZPolynomial p = gen.zpoly(n), q = gen.zpoly(n), r = gen.zpoly(n);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    const ZPolynomial d = gen.nonzero_zpoly(n);
    EXPECT_EQ(poly_divide_exact(p * d, d), p);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(poly_diff(p * q, k), poly_diff(p, k) * q + p * poly_diff(q, k));
    std::vector<Rational> x;
    for (std::size_t k = 0; k < n; ++k) x.push_back(gen.rational());
    EXPECT_EQ(poly_eval(p * q, x), poly_eval(p, x) * poly_eval(q, x));
  }
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(to_string(z(2, 0) * z(2, 0) - z(2, 1) * Rational(3, 2) + zc(2, 1), "z"), "z1^2 - 3/2*z2 + 1");
  EXPECT_EQ(to_string(ZPolynomial(2), "z"), "0");
}
