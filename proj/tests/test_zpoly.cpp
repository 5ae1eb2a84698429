#include "capelli/weights.hpp"
#include "capelli/zpoly.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace capelli;

namespace {

QTPoly z(int n, int i) { return QTPoly::variable(n, i); }
QTPoly c(int n, const QTField& v) { return QTPoly::constant(n, v); }
QTPoly c(int n, int v) { return QTPoly::constant(n, QTField(v)); }

QTPoly random_poly(std::mt19937_64& rng, int n, int deg) {
  std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
  QTPoly f(n);
  for (const auto& a : enumerate(deg, n, EnumKind::compositions))
    if (coin(rng) == 0) f.add_term(a.exponent(), QTField(val(rng)) + qt_monomial(coin(rng), coin(rng)));
  return f;
}

}  // namespace

TEST(ZpArith, SpecExamples) {
  EXPECT_EQ(zp_arith(z(2, 1), z(2, 2), PolyArithKind::mul), QTPoly::term({1, 1}, QTField(1)));
  EXPECT_TRUE(zp_arith(z(2, 1) + c(2, 1), z(2, 1) + c(2, 1), PolyArithKind::sub).is_zero());
  const QTField q = q_param();
  const QTPoly lhs = zp_arith(z(1, 1) - c(1, 1), z(1, 1) - c(1, q), PolyArithKind::mul);
  EXPECT_EQ(lhs, z(1, 1) * z(1, 1) - z(1, 1).scaled(QTField(1) + q) + c(1, q));
}

TEST(ZpArith, RingLaws) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 2, 2), g = random_poly(rng, 2, 2), h = random_poly(rng, 2, 1);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f - g) + g, f);
    if (!g.is_zero()) EXPECT_EQ(exact_divide(f * g, g), f);
  }
}

TEST(Evaluate, SpecExamples) {
  const QTField t = t_param();
  const SpectralPoint<QTField> p{QTField(1), t.inverse()};
  EXPECT_EQ(evaluate(z(2, 1) + z(2, 2), p), QTField(1) + t.inverse());
  EXPECT_EQ(evaluate(c(2, 1), p), QTField(1));
  EXPECT_TRUE(evaluate(oracle::E(Composition{1, 0}), p).is_zero());
  EXPECT_THROW(evaluate(c(3, 1), p), std::invalid_argument);
}

TEST(Evaluate, IsRingHomomorphism) {
  std::mt19937_64 rng(4);
  const SpectralPoint<QTField> p = point_bar(Composition{2, 0, 1});
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 1);
    EXPECT_EQ(evaluate(f * g, p), evaluate(f, p) * evaluate(g, p));
    EXPECT_EQ(evaluate(f + g, p), evaluate(f, p) + evaluate(g, p));
  }
}

TEST(ExactDivide, SpecExamples) {
  const QTPoly a = z(2, 1) * z(2, 1) - z(2, 2) * z(2, 2);
  EXPECT_EQ(exact_divide(a, z(2, 1) - z(2, 2)), z(2, 1) + z(2, 2));
  EXPECT_TRUE(exact_divide(QTPoly(2), z(2, 1) - z(2, 2)).is_zero());
  EXPECT_EQ(exact_divide(z(2, 1) * z(2, 1) - swap_adjacent(z(2, 1) * z(2, 1), 1), z(2, 1) - z(2, 2)),
            z(2, 1) + z(2, 2));
  EXPECT_ANY_THROW(exact_divide(z(2, 1) + c(2, 1), z(2, 1) - z(2, 2)));
}

TEST(TopHomogeneous, SpecExamples) {
  EXPECT_EQ(top_homogeneous(z(1, 1) * z(1, 1) + z(1, 1) + c(1, 1)), z(1, 1) * z(1, 1));
  const QTPoly h = z(2, 1) * z(2, 2) + z(2, 2) * z(2, 2);
  EXPECT_EQ(top_homogeneous(h), h);
  const QTField t = t_param(), q = q_param();
  EXPECT_EQ(top_homogeneous(oracle::E(Composition{1, 0})),
            z(2, 1) + z(2, 2).scaled((t - QTField(1)) / (q * t - QTField(1))));
  EXPECT_TRUE(is_homogeneous(h));
  EXPECT_FALSE(is_homogeneous(h + c(2, 1)));
}

TEST(AffineSubstitute, SpecExamples) {
  const QTField q = q_param(), qm1 = q - QTField(1);
  EXPECT_EQ(affine_substitute(z(1, 1), qm1, QTField(1)), z(1, 1).scaled(qm1) + c(1, 1));
  std::mt19937_64 rng(6);
  const auto f = random_poly(rng, 2, 2);
  EXPECT_EQ(affine_substitute(f, QTField(1), QTField(0)), f);
  EXPECT_EQ(affine_substitute(z(1, 1) * z(1, 1), qm1, QTField(1)),
            (z(1, 1) * z(1, 1)).scaled(qm1 * qm1) + z(1, 1).scaled(QTField(2) * qm1) + c(1, 1));
  // inverse substitution undoes it
  EXPECT_EQ(affine_substitute(affine_substitute(f, qm1, QTField(1)), qm1.inverse(), -qm1.inverse()), f);
}

TEST(MonomialSymmetric, SpecExamples) {
  using Map = std::map<ExponentVector, QTField, GrlexGreater>;
  EXPECT_EQ(monomial_symmetric_expand(z(2, 1) + z(2, 2)), (Map{{ExponentVector{1, 0}, QTField(1)}}));
  EXPECT_EQ(monomial_symmetric_expand(z(2, 1) * z(2, 2)), (Map{{ExponentVector{1, 1}, QTField(1)}}));
  const QTPoly f = z(2, 1) * z(2, 1) + z(2, 2) * z(2, 2) + (z(2, 1) * z(2, 2)).scaled(QTField(3));
  const Map m = monomial_symmetric_expand(f);
  EXPECT_EQ(m, (Map{{ExponentVector{2, 0}, QTField(1)}, {ExponentVector{1, 1}, QTField(3)}}));
  EXPECT_EQ(from_monomial_symmetric(2, m), f);
  EXPECT_THROW(monomial_symmetric_expand(z(2, 1)), std::invalid_argument);
}

TEST(IsPolynomial, SpecExamples) {
  QTPoly f = c(2, 1);
  f.add_term(ExponentVector{-1, 0}, QTField(1));
  EXPECT_FALSE(is_polynomial(f));
  EXPECT_TRUE(is_polynomial(c(2, 1)));
  EXPECT_TRUE(is_polynomial(z(2, 1) * z(2, 2)));
}

TEST(Compose, SubstitutionMatchesEvaluation) {
  std::mt19937_64 rng(8);
  const auto f = random_poly(rng, 2, 2);
  const std::vector<QTPoly> subs{z(2, 2), z(2, 1)};
  EXPECT_EQ(compose(f, subs), swap_adjacent(f, 1));
  const SpectralPoint<QTField> p{QTField(2), q_param()};
  const std::vector<QTPoly> consts{c(2, p[0]), c(2, p[1])};
  EXPECT_EQ(compose(f, consts), c(2, evaluate(f, p)));
}
