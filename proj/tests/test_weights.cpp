#include "capelli/weights.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace capelli;

namespace {

// Subword property: u <= v iff u is a product of a subword of a reduced word of v.
bool bruhat_by_subwords(const Permutation& u, const Permutation& v) {
  const auto word = min_reduced_word(v);
  const std::size_t m = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Permutation p = Permutation::identity(v.n());
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) p = p * Permutation::simple(v.n(), word[k]);
    if (p == u) return true;
  }
  return false;
}

// Search over every permutation for a matching of the parts.
bool preceq_search(const Composition& lambda, const Composition& mu) {
  std::vector<int> pi(static_cast<std::size_t>(lambda.n()));
  std::iota(pi.begin(), pi.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i <= lambda.n() && ok; ++i) {
      const int j = pi[static_cast<std::size_t>(i - 1)];
      ok = i < j ? lambda(i) < mu(j) : lambda(i) <= mu(j);
    }
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

ArmLeg arm_leg_count(const Composition& lambda, int i, int j) {
  ArmLeg r;
  r.arm = lambda(i) - j;
  for (int k = 1; k <= lambda.n(); ++k) {
    if (k < i && j <= lambda(k) + 1 && lambda(k) + 1 <= lambda(i)) ++r.leg_before;
    if (k > i && j <= lambda(k) && lambda(k) <= lambda(i)) ++r.leg_after;
  }
  r.leg = r.leg_before + r.leg_after;
  return r;
}

}  // namespace

TEST(LambdaPlus, SpecExamples) {
  EXPECT_EQ(lambda_plus(Composition{0, 2, 1}), (Composition{2, 1, 0}));
  EXPECT_EQ(lambda_plus(Composition{3, 1, 1}), (Composition{3, 1, 1}));
  EXPECT_EQ(lambda_plus(Composition{1, 0, 2}), (Composition{2, 1, 0}));
}

TEST(WLambda, SpecExamples) {
  EXPECT_EQ(w_lambda(Composition{2, 1, 1}), Permutation::identity(3));
  EXPECT_EQ(w_lambda(Composition{0, 1}), Permutation::simple(2, 1));
  EXPECT_EQ(w_lambda(Composition{1, 0, 2}).one_line(), (std::vector<int>{2, 3, 1}));
}

TEST(WLambda, IsShortestSortingPermutation) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate(3, n, EnumKind::compositions)) {
      const Composition plus = lambda_plus(lambda);
      int best = 1 << 20;
      for (const auto& w : all_permutations(n)) {
        bool ok = true;
        for (int i = 1; i <= n; ++i) ok = ok && lambda(i) == plus(w(i));
        if (ok) best = std::min(best, w.length());
      }
      const Permutation w = w_lambda(lambda);
      for (int i = 1; i <= n; ++i) EXPECT_EQ(lambda(i), plus(w(i)));
      EXPECT_EQ(w.length(), best) << lambda.to_string();
    }
}

TEST(KVector, SpecExamples) {
  EXPECT_EQ(k_vector(Composition{2, 1, 0}), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(k_vector(Composition{0, 2, 1}), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(k_vector(Composition{0, 0}), (std::vector<int>{0, 1}));
}

TEST(KVector, IsPermutationOfIndices) {
  for (const auto& lambda : enumerate(4, 3, EnumKind::compositions)) {
    auto k = k_vector(lambda);
    std::sort(k.begin(), k.end());
    EXPECT_EQ(k, (std::vector<int>{0, 1, 2}));
  }
}

TEST(PointBar, SpecExamples) {
  const QTField t = t_param(), q = q_param();
  EXPECT_EQ(point_bar(Composition::zero(3)), (SpectralPoint<QTField>{QTField(1), t.inverse(), (t * t).inverse()}));
  EXPECT_EQ(point_bar(Composition{1, 0}), (SpectralPoint<QTField>{q, t.inverse()}));
  EXPECT_EQ(point_bar(Composition{0, 2, 1}), (SpectralPoint<QTField>{(t * t).inverse(), q * q, q / t}));
}

TEST(PointTilde, SpecExamples) {
  const RField r = r_param();
  EXPECT_EQ(point_tilde(Composition::zero(3)), (SpectralPoint<RField>{RField(0), -r, RField(-2) * r}));
  EXPECT_EQ(point_tilde(Composition{1, 0}), (SpectralPoint<RField>{RField(1), -r}));
  EXPECT_EQ(point_tilde(Composition{0, 2, 1}), (SpectralPoint<RField>{RField(-2) * r, RField(2), RField(1) - r}));
}

TEST(PointTilde, IsLimitOfPointBar) {
  for (int rv = 1; rv <= 3; ++rv)
    for (const auto& lambda : enumerate(3, 3, EnumKind::compositions)) {
      const auto bar = point_bar(lambda);
      const auto tilde = point_tilde(lambda);
      for (std::size_t i = 0; i < bar.size(); ++i) {
        const BigRational lim = limit_q1(substitute_t_power(bar[i] - QTField(1), rv), 1);
        const std::array<BigRational, 1> at{BigRational(rv)};
        EXPECT_EQ(lim, tilde[i].specialize(std::span<const BigRational>(at)));
      }
    }
}

TEST(Star, SpecExamples) {
  EXPECT_EQ(star_rotate(Composition{1, 0, 2}), (Composition{1, 1, 0}));
  EXPECT_EQ(star_truncated(Composition{2, 0, 0}), (Composition{1, 0, 0}));
  EXPECT_EQ(star_rotate(Composition{1, 1}), (Composition{0, 1}));
  EXPECT_THROW(star_rotate(Composition{1, 0}), std::invalid_argument);
  EXPECT_THROW(star_truncated(Composition{0, 0}), std::invalid_argument);
}

TEST(Bruhat, SpecExamples) {
  for (const auto& w : all_permutations(3)) EXPECT_TRUE(bruhat_leq(Permutation::identity(3), w));
  EXPECT_FALSE(bruhat_leq(Permutation::simple(2, 1), Permutation::identity(2)));
  EXPECT_TRUE(bruhat_leq(Permutation({2, 3, 1}), Permutation({3, 2, 1})));
}

TEST(Bruhat, MatchesSubwordOracle) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n))
        EXPECT_EQ(bruhat_leq(u, v), bruhat_by_subwords(u, v)) << u.to_string() << " " << v.to_string();
}

TEST(MinReducedWord, ReproducesPermutation) {
  for (const auto& w : all_permutations(4)) {
    const auto word = min_reduced_word(w);
    EXPECT_EQ(static_cast<int>(word.size()), w.length());
    Permutation p = Permutation::identity(4);
    for (int i : word) p = p * Permutation::simple(4, i);
    EXPECT_EQ(p, w);
  }
}

TEST(OrderLeq, SpecExamples) {
  EXPECT_TRUE(order_leq(Composition{0, 1}, Composition{1, 0}));
  EXPECT_TRUE(order_leq(Composition{1, 1}, Composition{2, 0}));
  EXPECT_FALSE(order_leq(Composition{2, 0}, Composition{1, 1}));
  EXPECT_THROW(order_leq(Composition{1, 0}, Composition{2, 0}), std::invalid_argument);
}

TEST(OrderLeq, IsPartialOrder) {
  const auto level = enumerate_size(3, 3, EnumKind::compositions);
  for (const auto& a : level) {
    EXPECT_TRUE(order_leq(a, a));
    for (const auto& b : level) {
      if (!(a == b) && order_leq(a, b)) EXPECT_FALSE(order_leq(b, a));
      for (const auto& c : level)
        if (order_leq(a, b) && order_leq(b, c)) EXPECT_TRUE(order_leq(a, c));
    }
  }
}

TEST(CMove, SpecExamples) {
  EXPECT_EQ(c_move(Composition{1, 0, 2}, {1, 3}), (Composition{2, 0, 2}));
  EXPECT_EQ(c_move(Composition{3, 1, 4}, {2}), (Composition{3, 2, 4}));
  EXPECT_EQ(c_move(Composition{1, 2}, {1, 2}), (Composition{2, 2}));
  EXPECT_THROW(c_move(Composition{1, 2}, {2, 1}), std::invalid_argument);
}

TEST(Preceq, SpecExamples) {
  const Composition lambda{1, 0, 2};
  EXPECT_TRUE(preceq(lambda, lambda));
  EXPECT_TRUE(preceq(lambda, c_move(lambda, {1, 3})));
  EXPECT_FALSE(preceq(Composition{1, 0}, Composition{0, 1}));
}

TEST(Preceq, MatchesSearchAndMovesIncrease) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate(3, n, EnumKind::compositions);
    for (const auto& a : all) {
      for (const auto& b : all) {
        EXPECT_EQ(preceq(a, b), preceq_search(a, b)) << a.to_string() << " " << b.to_string();
        if (preceq(a, b)) EXPECT_LE(a.size(), b.size());
      }
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) idx.push_back(i + 1);
        const Composition moved = c_move(a, idx);
        EXPECT_TRUE(preceq_search(a, moved));
        EXPECT_FALSE(preceq_search(moved, a));
      }
    }
  }
}

TEST(ArmLeg, SpecExamples) {
  const ArmLeg a = arm_leg(Composition{2, 1, 0}, {1, 1});
  EXPECT_EQ(a.arm, 1);
  EXPECT_EQ(a.leg_before, 0);
  EXPECT_EQ(a.leg_after, 1);
  EXPECT_EQ(a.leg, 1);
  const ArmLeg b = arm_leg(Composition{1}, {1, 1});
  EXPECT_EQ(b.arm, 0);
  EXPECT_EQ(b.leg, 0);
  const ArmLeg c = arm_leg(Composition{0, 2}, {2, 1});
  EXPECT_EQ(c.arm, 1);
  EXPECT_EQ(c.leg_before, 1);
  EXPECT_EQ(c.leg_after, 0);
  EXPECT_THROW(arm_leg(Composition{0, 2}, {1, 1}), std::out_of_range);
}

TEST(ArmLeg, MatchesDirectCount) {
  for (const auto& lambda : enumerate(4, 3, EnumKind::compositions))
    for (const Box& s : diagram(lambda)) {
      const ArmLeg x = arm_leg(lambda, s), y = arm_leg_count(lambda, s.i, s.j);
      EXPECT_EQ(x.arm, y.arm);
      EXPECT_EQ(x.leg_before, y.leg_before);
      EXPECT_EQ(x.leg_after, y.leg_after);
    }
}

TEST(NormFactor, SpecExamples) {
  const QTField q = q_param(), t = t_param();
  EXPECT_TRUE(norm_factor(Composition::zero(3), NormKind::nonsym).is_one());
  EXPECT_EQ(norm_factor(Composition{1}, NormKind::nonsym), QTField(1) - q * t);
  // box (1,1): arm 0, no legs
  EXPECT_EQ(norm_factor(Composition{1, 0}, NormKind::nonsym), QTField(1) - q * t);
  EXPECT_EQ(norm_factor(Composition{1, 0}, NormKind::sym), QTField(1) - t);
  EXPECT_THROW(norm_factor(Composition{0, 1}, NormKind::sym), std::invalid_argument);
}

TEST(NormFactorClassical, SpecExamples) {
  const RField r = r_param();
  EXPECT_TRUE(norm_factor_classical(Composition::zero(2), NormKind::nonsym).is_one());
  EXPECT_EQ(norm_factor_classical(Composition{1}, NormKind::nonsym), RField(1) + r);
  EXPECT_EQ(norm_factor_classical(Composition{2}, NormKind::nonsym), (RField(1) + r) * (RField(2) + r));
}

TEST(Enumerate, SpecExamples) {
  EXPECT_EQ(enumerate(1, 2, EnumKind::compositions),
            (std::vector<Composition>{Composition{0, 0}, Composition{1, 0}, Composition{0, 1}}));
  EXPECT_EQ(enumerate(2, 2, EnumKind::partitions),
            (std::vector<Composition>{Composition{0, 0}, Composition{1, 0}, Composition{2, 0}, Composition{1, 1}}));
  EXPECT_EQ(enumerate(2, 3, EnumKind::compositions).size(), 10u);
}

TEST(Enumerate, CountsAndDistinctness) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) {
      const auto all = enumerate(d, n, EnumKind::compositions);
      std::set<std::vector<int>> seen;
      for (const auto& c : all) seen.insert(c.parts());
      EXPECT_EQ(seen.size(), all.size());
      // C(n + d, n)
      long binom = 1;
      for (int k = 1; k <= n; ++k) binom = binom * (d + k) / k;
      EXPECT_EQ(static_cast<long>(all.size()), binom);
      for (const auto& p : enumerate(d, n, EnumKind::partitions)) EXPECT_TRUE(p.is_partition());
    }
}
