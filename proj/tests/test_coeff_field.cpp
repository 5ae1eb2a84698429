#include "capelli/field.hpp"
#include "capelli/param_gcd.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace capelli;

namespace {

using QTPolyP = ParamPolynomial<QT>;

QTPolyP qt_poly(std::initializer_list<std::pair<std::array<int, 2>, int>> terms) {
  std::vector<QTPolyP::Term> ts;
  for (const auto& [e, c] : terms) ts.push_back({e, BigRational(c)});
  return QTPolyP::from_terms(ts);
}

QTField frac(const QTPolyP& n, const QTPolyP& d) { return QTField::fraction(n, d); }

QTPolyP random_poly(std::mt19937_64& rng, int deg, int terms) {
  std::uniform_int_distribution<int> e(0, deg), c(-4, 4);
  std::vector<QTPolyP::Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({{e(rng), e(rng)}, BigRational(c(rng))});
  return QTPolyP::from_terms(ts);
}

QTField random_field(std::mt19937_64& rng) {
  QTPolyP d;
  while (d.is_zero()) d = random_poly(rng, 2, 3);
  return frac(random_poly(rng, 2, 3), d);
}

// Largest divisor among polynomials with degree <= 1 in q and in t and
// coefficients in {-1, 0, 1}. Monomials are units for divide_exact, so
// candidates with a monomial factor are skipped.
QTPolyP divisor_search(const QTPolyP& a, const QTPolyP& b) {
  QTPolyP best(1);
  const std::array<std::array<int, 2>, 4> exps{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (int code = 1; code < 81; ++code) {
    std::vector<QTPolyP::Term> ts;
    int c = code;
    for (const auto& e : exps) {
      const int v = c % 3 - 1;
      c /= 3;
      if (v) ts.push_back({e, BigRational(v)});
    }
    const QTPolyP cand = QTPolyP::from_terms(ts);
    if (cand.is_zero() || cand.is_constant()) continue;
    bool q_content = true, t_content = true;
    for (const auto& term : cand.terms()) {
      q_content = q_content && term.exp[0] > 0;
      t_content = t_content && term.exp[1] > 0;
    }
    if (q_content || t_content) continue;
    if (a.divide_exact(cand) && b.divide_exact(cand) && cand.total_degree() > best.total_degree()) best = cand;
  }
  return best;
}

}  // namespace

TEST(FieldArith, SpecExamples) {
  const QTField q = q_param(), t = t_param();
  EXPECT_EQ(field_arith(q, t, ArithKind::add), q + t);
  EXPECT_TRUE(field_arith(q * t - QTField(1), q * t - QTField(1), ArithKind::div).is_one());
  const QTField a = (t - QTField(1)) / (q * t - QTField(1));
  const QTField b = (q * t - QTField(1)) / (t - QTField(1));
  EXPECT_TRUE(field_arith(a, b, ArithKind::mul).is_one());
}

TEST(FieldArith, CanonicalFormIsUnique) {
  const QTField q = q_param(), t = t_param();
  // (q^2 t - q t)/(q t) and (q - 1) have the same canonical form
  const QTField x = (q * q * t - q * t) / (q * t);
  EXPECT_EQ(x, q - QTField(1));
  EXPECT_EQ(x.den().to_string(), QTPolyP(1).to_string());
  const QTField y = (QTField(1) - q * t) / (QTField(2) - QTField(2) * q * t * t);
  EXPECT_EQ(y, (q * t - QTField(1)) / (QTField(2) * q * t * t - QTField(2)));
  EXPECT_TRUE(y.den().leading().coef > 0);
}

TEST(ParamGcd, SpecExamples) {
  const auto g1 = param_gcd(qt_poly({{{2, 1}, 1}, {{1, 1}, -1}}), qt_poly({{{1, 1}, 1}}));
  EXPECT_TRUE(detail::proportional(g1, qt_poly({{{1, 1}, 1}})));
  const auto qt1 = qt_poly({{{1, 1}, 1}, {{0, 0}, -1}});
  const auto t1 = qt_poly({{{0, 1}, 1}, {{0, 0}, -1}});
  const auto q1 = qt_poly({{{1, 0}, 1}, {{0, 0}, -1}});
  EXPECT_TRUE(param_gcd(qt1, t1).is_constant());
  EXPECT_TRUE(detail::proportional(param_gcd(qt1 * t1, qt1 * q1), qt1));
}

TEST(ParamGcd, MatchesDivisorSearch) {
  std::mt19937_64 rng(11);
  const std::vector<QTPolyP> factors{
      qt_poly({{{1, 1}, 1}, {{0, 0}, -1}}), qt_poly({{{0, 1}, 1}, {{0, 0}, -1}}), qt_poly({{{1, 0}, 1}, {{0, 0}, 1}}),
      qt_poly({{{1, 0}, 1}, {{0, 1}, -1}}), qt_poly({{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, -1}})};
  std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const QTPolyP common = factors[pick(rng)];
    const QTPolyP a = common * factors[pick(rng)];
    const QTPolyP b = common * factors[pick(rng)];
    const QTPolyP g = param_gcd(a, b);
    ASSERT_TRUE(a.divide_exact(g) && b.divide_exact(g));
    const QTPolyP search = divisor_search(a, b);
    // the search only sees divisors of degree <= 1 per variable
    if (g.degree(0) <= 1 && g.degree(1) <= 1) {
      EXPECT_TRUE(detail::proportional(g, search) || g.total_degree() == search.total_degree())
          << a.to_string() << " , " << b.to_string();
    }
    EXPECT_GE(g.total_degree(), search.total_degree());
  }
}

TEST(ParamGcd, ContentIsKept) {
  // gcd((1-3q)(q+1), (1-3q)(q+2)) has the factor 1-3q
  const auto a = qt_poly({{{0, 0}, 1}, {{1, 0}, -3}}) * qt_poly({{{1, 0}, 1}, {{0, 0}, 1}});
  const auto b = qt_poly({{{0, 0}, 1}, {{1, 0}, -3}}) * qt_poly({{{1, 0}, 1}, {{0, 0}, 2}});
  EXPECT_EQ(param_gcd(a, b).total_degree(), 1);
}

TEST(FieldProperties, RandomIdentities) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const QTField a = random_field(rng), b = random_field(rng), c = random_field(rng);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ(a * b / b, a);
    EXPECT_EQ(a + b, b + a);
    const std::array<BigRational, 2> at{BigRational(3, 2), BigRational(5, 7)};
    try {
      EXPECT_EQ((a * b).specialize(std::span<const BigRational>(at)),
                a.specialize(std::span<const BigRational>(at)) * b.specialize(std::span<const BigRational>(at)));
    } catch (const DegenerateSpecialization&) {
    }
  }
}

TEST(Specialize, SpecExamples) {
  const QTField q = q_param(), t = t_param();
  const std::array<BigRational, 2> at{BigRational(2), BigRational(3)};
  EXPECT_EQ(((t - QTField(1)) / (q * t - QTField(1))).specialize(std::span<const BigRational>(at)), BigRational(2, 5));
  const std::array<BigRational, 2> ones{BigRational(1), BigRational(1)};
  EXPECT_EQ((q + t).specialize(std::span<const BigRational>(ones)), BigRational(2));
  EXPECT_THROW((QTField(1) / (q * t - QTField(1))).specialize(std::span<const BigRational>(ones)), DegenerateSpecialization);
}

TEST(SubstituteTPower, SpecExamples) {
  const QTField q = q_param(), t = t_param();
  const QField qq = QField::param(0);
  EXPECT_EQ(substitute_t_power(t, 2), qq * qq);
  EXPECT_EQ(substitute_t_power(qt_monomial(3, 1) - QTField(1), 2), qq.pow(5) - QField(1));
  EXPECT_EQ(substitute_t_power((t - QTField(1)) / (q - QTField(1)), 2), qq + QField(1));
}

TEST(LimitQ1, SpecExamples) {
  const QField q = QField::param(0);
  EXPECT_EQ(limit_q1(q - QField(1), 1), BigRational(1));
  EXPECT_EQ(limit_q1((q - QField(1)) * (q - QField(1)), 1), BigRational(0));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(limit_q1(substitute_t_power(qt_monomial(a, b) - QTField(1), r), 1), BigRational(a + b * r));
  EXPECT_THROW(limit_q1(QField(1) / (q - QField(1)), 0), LimitDoesNotExist);
}
