#include <gtest/gtest.h>

#include "qes/error.hpp"
#include "qes/gauged_operator.hpp"
#include "random_poly.hpp"

using namespace qes;

namespace {

ModelParams make(std::size_t n, Rational m, Rational a, Rational b, std::array<Rational, 3> roots) {
  ModelParams p;
  p.n = n;
  p.m = m;
  p.a = a;
  p.b = b;
  p.roots = roots;
  return p;
}

const std::array<Rational, 3> kDegenerate{Rational(2), Rational(-1), Rational(-1)};

TauPolynomial tau(std::initializer_list<unsigned> l) { return TauPolynomial::monomial(TauMonomial(l)); }

}  // namespace

TEST(ModelParams, DerivedInvariants) {
  const ModelParams p = make(2, 2, 0, 0, kDegenerate);
  EXPECT_EQ(p.g2(), Rational(12));
  EXPECT_EQ(p.g3(), Rational(8));
  EXPECT_NO_THROW(p.validate());
  EXPECT_THROW(make(2, 2, 0, 0, {Rational(1), Rational(1), Rational(1)}).validate(), InvalidParams);
  EXPECT_THROW(make(0, 2, 0, 0, kDegenerate).validate(), InvalidParams);
}

TEST(GaugeMask, ParseAndPrint) {
  EXPECT_EQ(GaugeMask::parse("none").str(), "none");
  EXPECT_EQ(GaugeMask::parse("32").str(), "23");
  EXPECT_EQ(GaugeMask::parse("123").size(), 3);
  EXPECT_EQ(GaugeMask::from_indices({1}).complement(), GaugeMask::parse("23"));
  EXPECT_THROW(GaugeMask::parse("4"), ParseError);
  EXPECT_THROW(GaugeMask::parse("11"), ParseError);
  for (GaugeMask m : GaugeMask::all()) EXPECT_EQ(GaugeMask::parse(m.str()), m);
}

TEST(Coupling, Examples) {
  EXPECT_EQ(coupling_c_m(make(2, 2, 0, 0, kDegenerate)), Rational(20));
  EXPECT_EQ(coupling_c_m(make(1, 1, Rational(7, 3), 0, kDegenerate)), Rational(6));
  EXPECT_EQ(coupling_c_m(make(1, 0, 0, 0, kDegenerate)), Rational(0));
  // Direct substitution: N=3, m=1, a=1/2, b=1/4 -> (2+2+1)(2+1+2+1/2).
  EXPECT_EQ(coupling_c_m(make(3, 1, Rational(1, 2), Rational(1, 4), kDegenerate)), Rational(55, 2));
}

TEST(ShiftedDegree, Examples) {
  EXPECT_EQ(shifted_degree(make(2, 2, 0, 0, kDegenerate), GaugeMask::parse("12")), Rational(1));
  EXPECT_EQ(shifted_degree(make(2, Rational(7, 3), 0, Rational(5, 9), kDegenerate), GaugeMask()), Rational(7, 3));
  EXPECT_EQ(shifted_degree(make(2, Rational(5, 2), 0, 0, kDegenerate), GaugeMask::parse("3")), Rational(2));
}

TEST(ValidMasks, Examples) {
  const auto names = [](const std::vector<GaugeMask>& masks) {
    std::vector<std::string> out;
    for (auto m : masks) out.push_back(m.str());
    return out;
  };
  EXPECT_EQ(names(list_valid_masks(make(2, 2, 0, 0, kDegenerate))),
            (std::vector<std::string>{"none", "12", "13", "23"}));
  EXPECT_EQ(names(list_valid_masks(make(2, Rational(5, 2), 0, 0, kDegenerate))),
            (std::vector<std::string>{"1", "2", "3", "123"}));
  EXPECT_EQ(names(list_valid_masks(make(2, 2, 0, Rational(1, 4), kDegenerate))), (std::vector<std::string>{"none"}));
  EXPECT_EQ(names(list_valid_masks(make(2, 2, 0, Rational(1, 2), kDegenerate))), (std::vector<std::string>{"none"}));
  // m = 1/2: the n_f = 3 mask would need m~ = -1.
  EXPECT_EQ(names(list_valid_masks(make(1, Rational(1, 2), 0, 0, kDegenerate))),
            (std::vector<std::string>{"1", "2", "3"}));
}

TEST(BuildOperator, EmptyMaskHasNoGaugeTerms) {
  const GaugedOperator op = build_gauged_operator(make(2, 2, 1, Rational(1, 3), kDegenerate), GaugeMask());
  EXPECT_TRUE(op.q().is_zero());
  EXPECT_TRUE(op.s().is_zero());
  EXPECT_EQ(op.degree(), 2u);
}

TEST(BuildOperator, ScalarGaugePotentialMatchesRationalFunction) {
  // b = 0, mask {2,3}, roots (2, -1 + eps, -1 - eps): s(z) = 6z - 3 e1.
  for (const Rational& eps : {Rational(0), Rational(1, 3), Rational(7, 5)}) {
    const std::array<Rational, 3> roots{Rational(2), Rational(-1) + eps, Rational(-1) - eps};
    const ModelParams p = make(2, 2, Rational(3, 2), 0, roots);
    const GaugedOperator op = build_gauged_operator(p, GaugeMask::parse("23"));
    ZPolynomial expected = ZPolynomial::variable(1, 0) * Rational(6);
    expected.add_term(Monomial{0}, Rational(-6));
    EXPECT_EQ(op.s(), expected) << "eps=" << eps;

    // Evaluate p (lambda^2 + lambda') + (b + 1/2) p' lambda directly away from the roots.
    for (const Rational& x : {Rational(5, 7), Rational(-11, 3), Rational(13)}) {
      if (x == roots[1] || x == roots[2]) continue;
      const Rational nu(1, 2);
      const Rational p_x = Rational(4) * (x - roots[0]) * (x - roots[1]) * (x - roots[2]);
      const Rational dp_x = Rational(12) * x * x - p.g2();
      const Rational lam = nu / (x - roots[1]) + nu / (x - roots[2]);
      const Rational dlam = -nu / pow(x - roots[1], 2) - nu / pow(x - roots[2], 2);
      const Rational direct = p_x * (lam * lam + dlam) + Rational(1, 2) * dp_x * lam;
      const std::vector<Rational> at{x};
      EXPECT_EQ(poly_eval(op.s(), at), direct);
      EXPECT_EQ(poly_eval(op.q(), at), p_x * lam);
    }
  }
}

TEST(BuildOperator, AllMasksCancelForAnyB) {
  qes::testing::Generator gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational e1 = gen.rational(), e3 = gen.rational();
    ModelParams p = make(2, 0, gen.rational(), gen.rational(), {e1, -e1 - e3, e3});
    for (GaugeMask mask : GaugeMask::all()) {
      p.m = Rational(2) - p.b * Rational(mask.size()) + Rational(mask.size()) / Rational(2);
      EXPECT_NO_THROW(build_gauged_operator(p, mask)) << "mask " << mask.str() << " b=" << p.b;
    }
  }
}

TEST(BuildOperator, DegenerateRootsStayPolynomial) {
  for (GaugeMask mask : GaugeMask::all()) {
    ModelParams p = make(2, 2, 1, 0, kDegenerate);
    p.m = Rational(2) + Rational(mask.size()) / Rational(2);
    EXPECT_NO_THROW(build_gauged_operator(p, mask)) << mask.str();
  }
}

TEST(BuildOperator, PerturbedExponentLeavesPole) {
  const ModelParams p = make(2, 2, 1, 0, {Rational(2), Rational(-3, 2), Rational(-1, 2)});
  const GaugeMask mask = GaugeMask::parse("23");
  EXPECT_THROW(build_gauged_operator(p, mask, Rational(1, 3)), NonCancellingPole);
  for (const Rational& nu : {Rational(1), Rational(-1, 2), Rational(2, 3), Rational(1, 4)})
    EXPECT_THROW(build_gauged_operator(p, mask, nu), NonCancellingPole) << nu;
  // nu = 0 and nu = 1/2 - b are the two exponents that cancel.
  EXPECT_NO_THROW(build_gauged_operator(p, mask, Rational(0)));
  EXPECT_NO_THROW(build_gauged_operator(p, mask, Rational(1, 2)));
}

TEST(BuildOperator, RejectsBadDegree) {
  EXPECT_THROW(build_gauged_operator(make(2, Rational(5, 2), 0, 0, kDegenerate), GaugeMask()), InvalidDegree);
  EXPECT_THROW(build_gauged_operator(make(2, 0, 0, 0, kDegenerate), GaugeMask::parse("12")), InvalidDegree);
}

TEST(Apply, SixBySixColumns) {
  qes::testing::Generator gen(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational a = gen.rational(), b = gen.rational(), e1 = gen.rational(), e3 = gen.rational();
    const ModelParams p = make(2, 2, a, b, {e1, -e1 - e3, e3});
    const GaugedOperator op = build_gauged_operator(p, GaugeMask());

    EXPECT_EQ(op.apply(tau({0, 0})), tau({1, 0}) * (Rational(16) * a + Rational(24) * b + Rational(20)));

    const TauPolynomial image = op.apply(tau({1, 0}));
    EXPECT_EQ(image.coefficient(TauMonomial{0, 0}), p.g2() * (Rational(2) * a + Rational(2) * b + Rational(1)));
    EXPECT_EQ(image.coefficient(TauMonomial{0, 1}), Rational(8) * a + Rational(24) * b + Rational(12));
    EXPECT_EQ(image.coefficient(TauMonomial{2, 0}), Rational(8) * a + Rational(12) * b + Rational(14));
    EXPECT_EQ(image.size(), 3u);
  }
}

TEST(Apply, GaugedConstant) {
  const Rational a(5, 3);
  const std::array<Rational, 3> roots{Rational(2), Rational(-3, 4), Rational(-5, 4)};
  const GaugedOperator op = build_gauged_operator(make(2, 2, a, 0, roots), GaugeMask::parse("23"));
  TauPolynomial expected = tau({1, 0}) * (Rational(14) + Rational(8) * a);
  expected.add_term(TauMonomial{0, 0}, (Rational(6) + Rational(4) * a) * roots[0]);
  EXPECT_EQ(op.apply(tau({0, 0})), expected);
}

TEST(ApplyProperty, PotentialCoefficient) {
  qes::testing::Generator gen(23);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const Rational e1 = gen.rational(), e3 = gen.rational();
      const ModelParams p = make(n, Rational(std::uniform_int_distribution<long>(0, 4)(gen.engine())), gen.rational(),
                                 gen.rational(), {e1, -e1 - e3, e3});
      const GaugedOperator op = build_gauged_operator(p, GaugeMask());
      TauMonomial t1(n);
      t1[0] = 1;
      const Rational strength =
          p.m * (Rational(12) * p.b + Rational(8) * p.a * Rational(static_cast<long>(n) - 1) + Rational(4) * p.m + 2);
      EXPECT_EQ(op.apply(TauPolynomial::constant(n, 1)), TauPolynomial::monomial(t1, strength));
    }
}

TEST(ApplyProperty, Linearity) {
  qes::testing::Generator gen(29);
  for (GaugeMask mask : GaugeMask::all()) {
    const Rational e1 = gen.rational(), e3 = gen.rational();
    ModelParams p = make(3, 0, gen.rational(), gen.rational(), {e1, -e1 - e3, e3});
    p.m = Rational(3) - p.b * Rational(mask.size()) + Rational(mask.size()) / Rational(2);
    const GaugedOperator op = build_gauged_operator(p, mask);
    const TauPolynomial f = gen.taupoly(3, 3), g = gen.taupoly(3, 3);
    const Rational alpha = gen.rational(), beta = gen.rational();
    EXPECT_EQ(op.apply(f * alpha + g * beta), op.apply(f) * alpha + op.apply(g) * beta);
  }
}

TEST(Apply, RejectsWrongArity) {
  const GaugedOperator op = build_gauged_operator(make(2, 2, 0, 0, kDegenerate), GaugeMask());
  EXPECT_THROW(op.apply(TauPolynomial::constant(3, 1)), DimensionMismatch);
}
