#include <gtest/gtest.h>

#include "qes/error.hpp"
#include "qes/rational.hpp"

using qes::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_EQ(Rational(10, 5).str(), "2");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("2.5e-1"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("3E2"), Rational(300));
  EXPECT_THROW(Rational::parse("1/0"), qes::ParseError);
  EXPECT_THROW(Rational::parse("abc"), qes::ParseError);
  EXPECT_THROW(Rational::parse(""), qes::ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), qes::ParseError);
}

TEST(Rational, StringRoundTrip) {
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 9; ++d) EXPECT_EQ(Rational::parse(Rational(n, d).str()), Rational(n, d));
}

TEST(Rational, NearestDouble) {
  EXPECT_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(Rational(2, 3).to_double(), 2.0 / 3.0);
  EXPECT_EQ(Rational(-1, 10).to_double(), -0.1);
  // 2^53 + 1 is not representable; nearest-even rounds down.
  EXPECT_EQ(Rational::parse("9007199254740993").to_double(), 9007199254740992.0);
  EXPECT_EQ(Rational::parse("9007199254740992").to_double(), 9007199254740992.0);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(qes::pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), qes::Error);
}
