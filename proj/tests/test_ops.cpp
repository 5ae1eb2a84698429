#include "capelli/ops.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace capelli;

namespace {

QTPoly z(int n, int i) { return QTPoly::variable(n, i); }
QTPoly c(int n, const QTField& v) { return QTPoly::constant(n, v); }
RPoly zr(int n, int i) { return RPoly::variable(n, i); }

QTPoly random_poly(std::mt19937_64& rng, int n, int deg) {
  std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
  QTPoly f(n);
  for (const auto& a : enumerate(deg, n, EnumKind::compositions))
    if (coin(rng) != 0) f.add_term(a.exponent(), QTField(val(rng)) + qt_monomial(coin(rng), -coin(rng)));
  return f;
}

RPoly random_rpoly(std::mt19937_64& rng, int n, int deg) {
  std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
  RPoly f(n);
  for (const auto& a : enumerate(deg, n, EnumKind::compositions))
    if (coin(rng) != 0) f.add_term(a.exponent(), RField(val(rng)) + RField(coin(rng)) * r_param());
  return f;
}

const QTField& t() {
  static const QTField v = t_param();
  return v;
}

}  // namespace

TEST(Si, SpecExamples) {
  EXPECT_EQ(apply_si(z(2, 1), 1), z(2, 2));
  const QTPoly e1 = z(3, 1) + z(3, 2) + z(3, 3);
  EXPECT_EQ(apply_si(e1, 2), e1);
  EXPECT_EQ(apply_si(z(2, 1) * z(2, 2), 1), z(2, 1) * z(2, 2));
  EXPECT_THROW(apply_si(z(2, 1), 2), std::out_of_range);
}

TEST(Ni, SpecExamples) {
  EXPECT_EQ(apply_ni(z(2, 1), 1), c(2, QTField(1)));
  EXPECT_TRUE(apply_ni(z(2, 1) + z(2, 2), 1).is_zero());
  EXPECT_EQ(apply_ni(z(2, 1) * z(2, 1), 1), z(2, 1) + z(2, 2));
}

TEST(Hecke, SpecExamples) {
  const QTPoly one = c(3, QTField(1));
  for (int i = 1; i <= 2; ++i) {
    EXPECT_EQ(apply_hecke(one, i, false), c(3, t()));
    EXPECT_EQ(apply_hecke(one, i, true), one);
  }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_poly(rng, 3, 2);
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(apply_hecke(f, i, false) - apply_hecke(f, i, true), f.scaled(t() - QTField(1)));
      EXPECT_EQ(apply_hecke(f, i, false), apply_hecke_alt(f, i));
    }
  }
}

TEST(Hecke, QuadraticAndBraidRelations) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 8; ++trial) {
    const auto f = random_poly(rng, 3, 3);
    for (int i = 1; i <= 2; ++i) {
      const QTPoly hf = apply_hecke(f, i, false);
      // (H + 1)(H - t) = 0
      const QTPoly g = hf - f.scaled(t());
      EXPECT_TRUE((apply_hecke(g, i, false) + g).is_zero());
      EXPECT_EQ(apply_hecke(apply_hecke(f, i, true), i, false), f.scaled(t()));
    }
    const auto h = [](const QTPoly& x, int i) { return apply_hecke(x, i, false); };
    EXPECT_EQ(h(h(h(f, 1), 2), 1), h(h(h(f, 2), 1), 2));
  }
  std::mt19937_64 rng4(3);
  const auto f = random_poly(rng4, 4, 2);
  EXPECT_EQ(apply_hecke(apply_hecke(f, 3, false), 1, false), apply_hecke(apply_hecke(f, 1, false), 3, false));
}

TEST(Hecke, EvaluationLocality) {
  std::mt19937_64 rng(4);
  const auto f = random_poly(rng, 3, 2);
  for (const auto& mu : enumerate(2, 3, EnumKind::compositions))
    for (int i = 1; i <= 2; ++i) {
      const auto p = point_bar(mu);
      auto sp = p;
      std::swap(sp[static_cast<std::size_t>(i - 1)], sp[static_cast<std::size_t>(i)]);
      const QTField a = p[static_cast<std::size_t>(i - 1)], b = p[static_cast<std::size_t>(i)];
      const QTField c1 = (t() - QTField(1)) * b / (a - b), c2 = (a - t() * b) / (a - b);
      EXPECT_EQ(evaluate(apply_hecke(f, i, true), p), c1 * evaluate(f, p) + c2 * evaluate(f, sp));
      if (mu(i) == mu(i + 1)) EXPECT_TRUE(c2.is_zero());
    }
}

TEST(Delta, SpecExamples) {
  const QTField q = q_param();
  EXPECT_EQ(apply_delta(z(3, 1)), z(3, 3).scaled(q.inverse()));
  EXPECT_EQ(apply_delta(c(3, t())), c(3, t()));
  EXPECT_EQ(apply_delta(z(3, 3)), z(3, 2));
}

TEST(Phi, SpecExamples) {
  EXPECT_EQ(apply_phi(c(3, QTField(1))), z(3, 3) - c(3, (t() * t()).inverse()));
  const QTPoly phi1 = apply_phi(c(2, QTField(1)));
  EXPECT_EQ(phi1, z(2, 2) - c(2, t().inverse()));
  EXPECT_EQ(phi1, oracle::E(Composition{0, 1}));
  std::mt19937_64 rng(5);
  const auto f = random_poly(rng, 2, 2);
  EXPECT_EQ(apply_phi(f).total_degree(), f.total_degree() + 1);
}

TEST(XiInv, SpecExamples) {
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(apply_xi_inv(c(n, QTField(1)), n), c(n, t().pow(n - 1)));
  std::mt19937_64 rng(6);
  const auto f = top_homogeneous(random_poly(rng, 2, 2));
  for (int i = 1; i <= 2; ++i) {
    EXPECT_TRUE(is_homogeneous(apply_xi_inv(f, i)));
    EXPECT_EQ(apply_xi_inv(f, i).total_degree(), f.total_degree());
  }
  const Composition lambda{1, 0};
  const QTPoly ebar = top_homogeneous(oracle::E(lambda));
  const auto pt = point_bar(lambda);
  for (int i = 1; i <= 2; ++i)
    EXPECT_EQ(apply_xi_inv(ebar, i), ebar.scaled(pt[static_cast<std::size_t>(i - 1)].inverse()));
}

TEST(XiBig, SpecExamples) {
  const Composition lambda{1, 0};
  const QTPoly e = oracle::E(lambda);
  EXPECT_EQ(apply_xi_big(e, 1), e.scaled(q_param().inverse()));
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(apply_xi_big(c(n, QTField(1)), i), c(n, t().pow(i - 1)));
  for (const auto& a : enumerate(3, 2, EnumKind::compositions)) {
    const QTPoly m = QTPoly::term(a.exponent(), QTField(1));
    EXPECT_EQ(apply_xi_big(apply_xi_big(m, 2), 1), apply_xi_big(apply_xi_big(m, 1), 2));
  }
}

TEST(XiBig, IntertwiningAndRecursion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f = random_poly(rng, 3, 2);
    for (int i = 1; i <= 3; ++i) {
      const QTPoly x = apply_xi_big(f, i);
      EXPECT_TRUE(is_polynomial(x));
      EXPECT_LE(x.total_degree(), f.total_degree());
      if (i < 3) EXPECT_EQ(x, apply_xi_big_recursive(f, i));
    }
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(apply_hecke(apply_xi_big(f, i), i, false), apply_xi_big(apply_hecke(f, i, true), i + 1));
      const QTPoly rec = apply_hecke(apply_xi_big(apply_hecke(f, i, true), i + 1), i, true).scaled(t().inverse());
      EXPECT_EQ(apply_xi_big(f, i), rec);
    }
    const int j = 3;
    EXPECT_EQ(apply_hecke(apply_xi_big(f, j), 1, false), apply_xi_big(apply_hecke(f, 1, false), j));
  }
}

TEST(Zi, SpecExamples) {
  EXPECT_EQ(apply_zi(c(1, QTField(1)), 1), z(1, 1) - c(1, QTField(1)));
  for (int n = 1; n <= 2; ++n)
    for (const auto& lambda : enumerate(2, n, EnumKind::compositions)) {
      const QTPoly e = oracle::E(lambda);
      const int d = lambda.size();
      for (int i = 1; i <= n; ++i) {
        const QTPoly zf = apply_zi(e, i);
        EXPECT_LE(zf.total_degree(), d + 1);
        EXPECT_EQ(top_homogeneous(zf), (z(n, i) * top_homogeneous(e)).scaled(euler_scalar(n, d)));
      }
    }
}

TEST(Am, SpecExamples) {
  std::mt19937_64 rng(8);
  const auto f = random_poly(rng, 3, 2);
  EXPECT_EQ(apply_am(f, 3, false), apply_phi(f));
  EXPECT_EQ(apply_am(f, 3, true), apply_phi(f));
  const QTPoly one = c(3, QTField(1));
  EXPECT_EQ(apply_am(one, 2, false), apply_hecke(apply_phi(one), 2, false));
  EXPECT_EQ(apply_am(one, 1, true), apply_hecke(apply_hecke(apply_phi(one), 2, true), 1, true));
}

TEST(EulerS, ActsByScalarOnEachDegree) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(apply_euler_s(c(n, QTField(1))), c(n, euler_scalar(n, 0)));
  const QTPoly e = oracle::E(Composition{1, 0});
  EXPECT_EQ(apply_euler_s(e), e.scaled(euler_scalar(2, 1)));
  for (const auto& lambda : enumerate(2, 2, EnumKind::compositions)) {
    const QTPoly el = oracle::E(lambda);
    EXPECT_EQ(apply_euler_s(el), el.scaled(euler_scalar(2, lambda.size())));
  }
  for (const auto& a : enumerate(3, 2, EnumKind::compositions)) {
    const QTPoly m = QTPoly::term(a.exponent(), QTField(1));
    for (int i = 1; i <= 2; ++i) EXPECT_EQ(apply_euler_s(apply_xi_big(m, i)), apply_xi_big(apply_euler_s(m), i));
  }
}

TEST(Sigma, Relations) {
  std::mt19937_64 rng(9);
  const RField r = r_param();
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = random_rpoly(rng, 3, 3);
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(apply_sigma(apply_sigma(f, i), i), f);
      EXPECT_EQ(times_z(apply_sigma(f, i), i + 1), apply_sigma(times_z(f, i), i) - f.scaled(r));
    }
    EXPECT_EQ(apply_sigma(apply_sigma(apply_sigma(f, 1), 2), 1), apply_sigma(apply_sigma(apply_sigma(f, 2), 1), 2));
  }
}

TEST(Classical, SpecExamples) {
  const Composition lambda{1, 0};
  const RPoly e = oracle::E_tilde(lambda);
  const auto pt = point_tilde(lambda);
  for (int i = 1; i <= 2; ++i) {
    const OperatorTag tag{OperatorKind::XiTilde, i};
    EXPECT_EQ(apply_classical(e, tag), e.scaled(pt[static_cast<std::size_t>(i - 1)]));
  }
  EXPECT_EQ(apply_delta_tilde(zr(2, 1)), zr(2, 2) - RPoly::constant(2, RField(1)));
  EXPECT_EQ(apply_phi_tilde(RPoly::constant(3, RField(1))),
            zr(3, 3) + RPoly::constant(3, RField(2) * r_param()));
}

TEST(OperatorTag, Validation) {
  const QTPoly f = z(2, 1);
  EXPECT_THROW(apply(OperatorTag{OperatorKind::Hi, std::nullopt}, f), std::invalid_argument);
  EXPECT_THROW(apply(OperatorTag{OperatorKind::Delta, 1}, f), std::invalid_argument);
  EXPECT_ANY_THROW(apply(OperatorTag{OperatorKind::Hi, 2}, f));
  EXPECT_ANY_THROW(apply(OperatorTag{OperatorKind::XiBig, 3}, f));
  EXPECT_THROW(apply(OperatorTag{OperatorKind::SigmaI, 1}, f), std::invalid_argument);
  EXPECT_EQ(apply(OperatorTag{OperatorKind::Phi, std::nullopt}, f), apply_phi(f));
  EXPECT_EQ(apply(OperatorTag{OperatorKind::XiBig, 2}, f), apply_xi_big(f, 2));
  EXPECT_THROW(apply_classical(zr(2, 1), OperatorTag{OperatorKind::Hi, 1}), std::invalid_argument);
}
