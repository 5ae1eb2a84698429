#pragma once

// Verification suites. Each suite walks a range of (n, lambda, ...) cases
// and records every identity that fails together with the offending value.
// Identities are checked over the formal fields; some suites add checks at
// screened random rational specializations.

#include "capelli/construct.hpp"
#include "capelli/interpolation.hpp"
#include "capelli/ops.hpp"
#include "capelli/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

struct SuiteConfig {
  int n_max = 2;
  int degree_max = 2;
  int extra_degree = 2;
  std::vector<int> classical_r_values{1, 2, 3};
  std::uint64_t random_seed = 1;
  int specialization_samples = 3;
};

struct SuiteFailure {
  std::string where;
  std::string value;
};

struct SuiteReport {
  std::string name;
  int cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;
  bool passed() const { return failures.empty(); }
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "vanishing",    "eigen",         "commutativity", "triangularity", "extra_vanishing",
      "ideal_basis",  "product_support", "integrality", "special_t1",    "special_tq",
      "inversion",    "hecke_relations", "limit",       "classical_eigen", "classical_integrality"};
  return names;
}

/// Which statements each suite exercises. The test suite checks that the
/// union covers required_coverage().
inline const std::map<std::string, std::vector<std::string>>& coverage_manifest() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"vanishing",
       {"spectral-points", "rotation-lemma", "unisolvence", "symmetric-unisolvence", "defining-vanishing",
        "phi-rotation", "raising-recursion", "arm-leg-normalization"}},
      {"eigen",
       {"cherednik-eigenvalues", "hecke-eigen-equations", "hecke-stability", "top-macdonald",
        "symmetric-eigenvalues", "euler-operator", "xi-small-inverse"}},
      {"commutativity", {"cherednik-commute", "euler-operator"}},
      {"triangularity", {"expansion-triangularity", "bruhat-dominance-order", "symmetric-triangularity"}},
      {"extra_vanishing", {"extra-vanishing", "inclusion-order", "order-size-lemma", "cover-lemma", "candidate-permutation"}},
      {"ideal_basis", {"ideal-basis", "ideal-stability", "orbit-decomposition"}},
      {"product_support", {"product-support"}},
      {"integrality", {"laurent-integrality", "refined-integrality", "raising-recursion"}},
      {"special_t1", {"t-equals-one"}},
      {"special_tq", {"t-equals-q", "factorial-schur"}},
      {"inversion", {"commuting-diagram", "inversion-formula", "raising-operators", "classical-inversion"}},
      {"hecke_relations",
       {"divided-difference", "hecke-quadratic", "hecke-braid", "hecke-bar-product", "hecke-difference",
        "locality-lemma", "intertwining", "xi-recursion", "xi-polynomial", "graded-hecke"}},
      {"limit",
       {"limit-calculus", "phi-conjugation", "classical-points", "delta-limit", "phi-limit", "hecke-limit",
        "xi-limit", "z-limit", "classical-limit", "normalized-limit"}},
      {"classical_eigen", {"classical-interpolation", "classical-eigenvalues", "classical-symmetric"}},
      {"classical_integrality", {"classical-integrality"}},
  };
  return m;
}

inline const std::vector<std::string>& required_coverage() {
  static const std::vector<std::string> tags{
      "spectral-points", "rotation-lemma", "unisolvence", "symmetric-unisolvence", "defining-vanishing",
      "phi-rotation", "orbit-decomposition", "t-equals-one", "t-equals-q", "factorial-schur",
      "divided-difference", "hecke-quadratic", "hecke-braid", "hecke-bar-product", "hecke-difference",
      "locality-lemma", "hecke-stability", "hecke-eigen-equations", "xi-small-inverse", "cherednik-eigenvalues",
      "xi-polynomial", "xi-recursion", "intertwining", "cherednik-commute", "symmetric-eigenvalues",
      "top-macdonald", "expansion-triangularity", "bruhat-dominance-order", "symmetric-triangularity",
      "inclusion-order", "cover-lemma", "order-size-lemma", "candidate-permutation", "ideal-stability",
      "extra-vanishing", "ideal-basis", "product-support", "commuting-diagram", "inversion-formula",
      "raising-operators", "euler-operator", "arm-leg-normalization", "laurent-integrality", "raising-recursion",
      "refined-integrality", "limit-calculus", "phi-conjugation", "classical-points", "delta-limit", "phi-limit",
      "hecke-limit", "xi-limit", "z-limit", "classical-limit", "normalized-limit", "graded-hecke",
      "classical-interpolation", "classical-eigenvalues", "classical-symmetric", "classical-inversion",
      "classical-integrality"};
  return tags;
}

/// Builders shared between suite runs.
class SuiteContext {
 public:
  Builder& builder(int n) {
    auto it = builders_.find(n);
    if (it == builders_.end()) it = builders_.emplace(n, std::make_unique<Builder>(n)).first;
    return *it->second;
  }

 private:
  std::map<int, std::unique_ptr<Builder>> builders_;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : report_(r) {}
  void next_case() { ++report_.cases; }
  void expect(bool ok, const std::string& where, const std::string& value = "") {
    if (!ok) report_.failures.push_back({where, value});
  }
  template <class Fn>
  void guarded(const std::string& where, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report_.failures.push_back({where, std::string("exception: ") + e.what()});
    }
  }

 private:
  SuiteReport& report_;
};

inline std::string lam(const Composition& l) { return l.to_string(); }

inline QTPoly random_qt_poly(std::mt19937_64& rng, int n, int degree, int terms) {
  QTPoly f(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto labels = enumerate(degree, n, EnumKind::compositions);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int k = 0; k < terms; ++k) {
    const int c = coef(rng);
    if (c == 0) continue;
    f.add_term(labels[pick(rng)].exponent(), QTField(c) * qt_monomial(coef(rng) % 2, coef(rng) % 2));
  }
  return f;
}

inline RPoly random_r_poly(std::mt19937_64& rng, int n, int degree, int terms) {
  RPoly f(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto labels = enumerate(degree, n, EnumKind::compositions);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int k = 0; k < terms; ++k) {
    const int c = coef(rng);
    if (c != 0) f.add_term(labels[pick(rng)].exponent(), RField(c) + RField(coef(rng)) * r_param());
  }
  return f;
}

/// Monomials of degree <= d in n variables.
template <class C>
std::vector<ZPolynomial<C>> monomial_basis_upto(int n, int d) {
  std::vector<ZPolynomial<C>> out;
  for (const auto& a : enumerate(d, n, EnumKind::compositions)) out.push_back(ZPolynomial<C>::term(a.exponent(), C(1)));
  return out;
}

inline BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(2, 19), den(1, 7);
  BigRational v(num(rng), den(rng));
  return v;
}

/// A (q0, t0) with q0^a t0^b != 1 for 0 <= a,b <= bound, (a,b) != 0, and
/// pairwise distinct specialized points for every label of size <= bound.
inline std::pair<BigRational, BigRational> screened_point(std::mt19937_64& rng, int n, int bound) {
  for (;;) {
    const BigRational q0 = random_rational(rng), t0 = random_rational(rng);
    bool ok = true;
    for (int a = 0; a <= bound + n && ok; ++a)
      for (int b = 0; b <= bound + n && ok; ++b)
        if ((a || b) && ipow(q0, static_cast<unsigned>(a)) * ipow(t0, static_cast<unsigned>(b)) == 1) ok = false;
    if (!ok) continue;
    std::set<std::vector<BigRational>> seen;
    const std::array<BigRational, 2> at{q0, t0};
    for (const auto& mu : enumerate(bound, n, EnumKind::compositions)) {
      std::vector<BigRational> p;
      for (const auto& c : point_bar(mu)) p.push_back(c.specialize(std::span<const BigRational>(at)));
      if (!seen.insert(p).second) ok = false;
    }
    if (ok) return {q0, t0};
  }
}

inline SpectralPoint<BigRational> specialize_point(const SpectralPoint<QTField>& p, const BigRational& q0,
                                                   const BigRational& t0) {
  const std::array<BigRational, 2> at{q0, t0};
  SpectralPoint<BigRational> out;
  for (const auto& c : p) out.push_back(c.specialize(std::span<const BigRational>(at)));
  return out;
}

inline bool in_integer_laurent(const QTField& c) {
  return c.is_laurent_polynomial() && c.as_laurent().has_integer_coefficients();
}

/// c * t^shift is a genuine integer polynomial in q and t.
inline bool in_shifted_integer_polynomial(const QTField& c, int shift) {
  if (!in_integer_laurent(c)) return false;
  const auto p = c.as_laurent().shifted({0, shift});
  return p.is_polynomial();
}

inline bool in_integer_r_polynomial(const RField& c) {
  return c.is_polynomial() && c.num().has_integer_coefficients();
}

// Lift a classical polynomial f(x) to F(z) = f((z-1)/(q-1)) over Q(q,t).
inline QTPoly lift_classical(const ZPolynomial<BigRational>& f) {
  const int n = f.nvars();
  const QTField inv = (q_param() - QTField(1)).inverse();
  std::vector<QTPoly> subs;
  for (int i = 1; i <= n; ++i) subs.push_back((QTPoly::variable(n, i) - QTPoly::constant(n, QTField(1))).scaled(inv));
  return compose(f.map_coefficients<QTField>([](const BigRational& c) { return QTField(c); }), subs);
}

inline RPoly rational_to_r(const ZPolynomial<BigRational>& f) {
  return f.map_coefficients<RField>([](const BigRational& c) { return RField(c); });
}

/// Compositions of length n with every part <= max_part.
inline std::vector<Composition> compositions_bounded(int n, int max_part) {
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.emplace_back(parts);
    int i = n - 1;
    while (i >= 0 && parts[static_cast<std::size_t>(i)] == max_part) parts[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return out;
    ++parts[static_cast<std::size_t>(i)];
  }
}

/// The size lemma, the cover lemma and candidate-vs-brute-force agreement
/// for every pair of compositions with parts <= max_part.
inline void check_order_lemmas(int n, int max_part, Recorder& rec) {
  const auto all = compositions_bounded(n, max_part);
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    subsets.push_back(idx);
  }
  for (const auto& lambda : all) {
    rec.next_case();
    const std::string where = "order n=" + std::to_string(n) + " lambda=" + lam(lambda);
    for (const auto& idx : subsets) {
      const Composition up = c_move(lambda, idx);
      rec.expect(up != lambda && preceq_brute(lambda, up), where + " lambda not below its c-move");
    }
    for (const auto& mu : all) {
      const bool fast = preceq(lambda, mu), slow = preceq_brute(lambda, mu);
      rec.expect(fast == slow, where + " candidate vs brute force at mu=" + lam(mu));
      if (slow && lambda.size() >= mu.size()) rec.expect(lambda == mu, where + " size lemma at mu=" + lam(mu));
      if (slow && lambda != mu) {
        bool found = false;
        for (const auto& idx : subsets) {
          if (preceq_brute(c_move(lambda, idx), mu)) {
            found = true;
            break;
          }
        }
        rec.expect(found, where + " no cover move towards mu=" + lam(mu));
      }
    }
  }
}

// ---- individual suites

inline void suite_vanishing(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (int d = 0; d <= cfg.degree_max; ++d) {
      rec.guarded("unisolvence n=" + std::to_string(n) + " d=" + std::to_string(d), [&] {
        rec.expect(!b.nonsym_interp().level_determinant(d).is_zero(), "nonsymmetric block determinant vanishes");
        rec.expect(!b.sym_interp().level_determinant(d).is_zero(), "symmetric block determinant vanishes");
      });
    }
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTPoly& ee = b.recurse_normalized(lambda);
        for (const auto& mu : enumerate(lambda.size(), n, EnumKind::compositions)) {
          const QTField v = evaluate(ee, point_bar(mu));
          if (mu == lambda)
            rec.expect(!v.is_zero(), where + " value at own point is zero");
          else
            rec.expect(v.is_zero(), where + " mu=" + lam(mu), v.to_string());
        }
        const QTPoly e = b.recurse_nonsym(lambda).body;
        rec.expect(e.coefficient(lambda.exponent()).is_one(), where + " not monic");
        rec.expect(e == b.interpolate_nonsym(lambda).body, where + " recursion differs from interpolation");
        if (lambda(n) != 0) {
          const Composition star = star_rotate(lambda);
          auto pl = point_bar(lambda), ps = point_bar(star);
          SpectralPoint<QTField> rotated{pl[static_cast<std::size_t>(n - 1)] * qt_monomial(-1, 0)};
          for (int i = 1; i < n; ++i) rotated.push_back(pl[static_cast<std::size_t>(i - 1)]);
          rec.expect(ps == rotated, where + " rotated spectral point mismatch");
          const QTPoly phi = apply_phi(b.recurse_nonsym(star).body).scaled(qt_monomial(lambda(n) - 1, 0));
          rec.expect(phi == e, where + " q^{lambda_n-1} Phi(E_star) != E");
        }
      });
    }
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::partitions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " sym lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTPoly p = b.interpolate_sym(lambda).body;
        for (const auto& mu : enumerate(lambda.size(), n, EnumKind::partitions)) {
          const QTField v = evaluate(p, point_bar(mu));
          rec.expect(mu == lambda ? !v.is_zero() : v.is_zero(), where + " mu=" + lam(mu), v.to_string());
        }
        rec.expect(is_symmetric(p), where + " P not symmetric");
      });
    }
  }
}

inline void suite_eigen(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      const auto point = point_bar(lambda);
      for (int i = 1; i <= n; ++i) {
        rec.next_case();
        const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda) + " i=" + std::to_string(i);
        rec.guarded(where, [&] {
          const QTPoly& e = b.recurse_normalized(lambda);
          const QTField inv = point[static_cast<std::size_t>(i - 1)].inverse();
          rec.expect(apply_xi_big(e, i) == e.scaled(inv), where + " Xi eigen equation");
          const QTPoly top = top_homogeneous(e);
          rec.expect(apply_xi_inv(top, i) == top.scaled(inv), where + " xi^{-1} on top part");
          if (i < n) {
            const int a = lambda(i), c = lambda(i + 1);
            if (a == c) {
              rec.expect(apply_hecke(e, i, true) == e, where + " Hbar E != E");
              rec.expect(apply_hecke(e, i, false) == e.scaled(t_param()), where + " H E != tE");
            }
            // H_i keeps the orbit span
            const auto coeffs = b.expand_in_E_basis(apply_hecke(b.recurse_nonsym(lambda).body, i, false));
            for (const auto& [nu, c2] : coeffs)
              rec.expect(lambda_plus(nu) == lambda_plus(lambda), where + " H_i E leaves the orbit span: " + lam(nu));
          }
          if (i == n) {
            rec.expect(apply_euler_s(e) == e.scaled(euler_scalar(n, lambda.size())), where + " Euler operator");
          }
        });
      }
    }
    // symmetric eigenvalues ride along with the (lambda, i) cases
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::partitions)) {
      const std::string where = "n=" + std::to_string(n) + " sym lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTPoly p = b.symmetrize_hecke(lambda).body;
        const auto point = point_bar(lambda);
        // elementary symmetric e_1, e_2 in the Xi operators
        QTPoly e1(n);
        QTField v1(0);
        for (int i = 1; i <= n; ++i) {
          e1 += apply_xi_big(p, i);
          v1 += point[static_cast<std::size_t>(i - 1)].inverse();
        }
        rec.expect(e1 == p.scaled(v1), where + " e_1(Xi) eigenvalue");
        QTPoly e2(n);
        QTField v2(0);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            e2 += apply_xi_big(apply_xi_big(p, j), i);
            v2 += (point[static_cast<std::size_t>(i - 1)] * point[static_cast<std::size_t>(j - 1)]).inverse();
          }
        rec.expect(e2 == p.scaled(v2), where + " e_2(Xi) eigenvalue");
      });
    }
  }
}

inline void suite_commutativity(const SuiteConfig& cfg, SuiteContext&, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n)
    for (const auto& m : monomial_basis_upto<QTField>(n, cfg.degree_max)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " z^" + m.leading().first.to_string();
      rec.guarded(where, [&] {
        std::vector<QTPoly> once;
        for (int i = 1; i <= n; ++i) once.push_back(apply_xi_big(m, i));
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const QTPoly ij = apply_xi_big(once[static_cast<std::size_t>(j - 1)], i);
            const QTPoly ji = apply_xi_big(once[static_cast<std::size_t>(i - 1)], j);
            rec.expect(ij == ji, where + " [Xi_" + std::to_string(i) + ",Xi_" + std::to_string(j) + "] != 0");
          }
        const QTPoly s = apply_euler_s(m);
        for (int i = 1; i <= n; ++i)
          rec.expect(apply_euler_s(once[static_cast<std::size_t>(i - 1)]) == apply_xi_big(s, i),
                     where + " S does not commute with Xi_" + std::to_string(i));
      });
    }
}

inline void suite_triangularity(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTPoly e = b.recurse_nonsym(lambda).body;
        rec.expect(e.total_degree() == lambda.size(), where + " degree");
        rec.expect(e.coefficient(lambda.exponent()).is_one(), where + " coefficient at lambda");
        for (const auto& [ex, c] : e.terms()) {
          if (ex.degree() != lambda.size()) continue;
          const Composition mu = Composition::from_exponent(ex);
          rec.expect(order_leq(mu, lambda), where + " support " + lam(mu) + " not below lambda");
        }
      });
    }
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::partitions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " sym lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const auto coeffs = monomial_symmetric_expand(b.symmetrize_hecke(lambda).body);
        rec.expect(coeffs.count(lambda.exponent()) && coeffs.at(lambda.exponent()).is_one(), where + " m_lambda coefficient");
        for (const auto& [ex, c] : coeffs) {
          if (ex.degree() != lambda.size()) continue;
          rec.expect(dominance_leq(Composition::from_exponent(ex), lambda), where + " m-support " + ex.to_string());
        }
      });
    }
  }
}

inline void suite_extra_vanishing(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  std::mt19937_64 rng(cfg.random_seed);
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    const int top = cfg.degree_max + cfg.extra_degree;
    const auto targets = enumerate(top, n, EnumKind::compositions);
    std::vector<std::pair<BigRational, BigRational>> samples;
    for (int s = 0; s < cfg.specialization_samples; ++s) samples.push_back(screened_point(rng, n, top));
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTPoly& ee = b.recurse_normalized(lambda);
        std::vector<ZPolynomial<BigRational>> special;
        for (const auto& [q0, t0] : samples) {
          const std::array<BigRational, 2> at{q0, t0};
          special.push_back(specialize(ee, std::span<const BigRational>(at)));
        }
        for (const auto& mu : targets) {
          if (mu.size() > lambda.size() + cfg.extra_degree) continue;
          const bool below = preceq(lambda, mu);
          const QTField v = evaluate(ee, point_bar(mu));
          if (!below) rec.expect(v.is_zero(), where + " mu=" + lam(mu) + " should vanish", v.to_string());
          if (!v.is_zero()) rec.expect(below, where + " nonzero at mu=" + lam(mu) + " without lambda <= mu");
          for (std::size_t s = 0; s < samples.size(); ++s) {
            const BigRational sv = evaluate(special[s], specialize_point(point_bar(mu), samples[s].first, samples[s].second));
            if (!below) rec.expect(sv.is_zero(), where + " mu=" + lam(mu) + " specialized value", sv.str());
          }
        }
      });
    }
    check_order_lemmas(n, cfg.degree_max, rec);
  }
}

inline void suite_ideal_basis(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  std::mt19937_64 rng(cfg.random_seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    const int top = cfg.degree_max;
    const auto all = enumerate(top, n, EnumKind::compositions);
    for (const auto& lambda : all) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        std::vector<Composition> inside, outside;
        for (const auto& nu : all) (preceq(lambda, nu) ? inside : outside).push_back(nu);
        // members of the ideal vanish outside it
        for (const auto& nu : inside)
          for (const auto& mu : outside)
            rec.expect(evaluate(b.recurse_normalized(nu), point_bar(mu)).is_zero(),
                       where + " E_" + lam(nu) + " nonzero at " + lam(mu));
        // membership by vanishing equals membership by expansion, on random combinations
        for (int trial = 0; trial < 2; ++trial) {
          QTPoly f(n);
          for (const auto& nu : inside) f += b.recurse_nonsym(nu).body.scaled(QTField(coef(rng)));
          const bool add_outside = trial == 1 && !outside.empty();
          if (add_outside) f += b.recurse_nonsym(outside[outside.size() / 2]).body;
          bool vanishes = true;
          for (const auto& mu : outside) vanishes = vanishes && evaluate(f, point_bar(mu)).is_zero();
          bool expands_inside = true;
          for (const auto& [nu, c] : b.expand_in_E_basis(f)) expands_inside = expands_inside && preceq(lambda, nu);
          rec.expect(vanishes == expands_inside, where + " vanishing and span membership disagree");
          rec.expect(vanishes == !add_outside, where + " membership of the random combination");
        }
        // H_i stability of the ideal span
        for (int i = 1; i < n; ++i)
          for (const auto& [nu, c] : b.expand_in_E_basis(apply_hecke(b.recurse_nonsym(lambda).body, i, true)))
            rec.expect(preceq(lambda, nu) || lambda_plus(nu) == lambda_plus(lambda), where + " Hbar image leaves the ideal");
      });
    }
    // orbit subspaces: the E_{w lambda} together span everything, P lies in its orbit block
    for (const auto& lambda : enumerate(top, n, EnumKind::partitions)) {
      rec.next_case();
      const std::string where = "orbit n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        for (const auto& [nu, c] : b.expand_in_E_basis(b.symmetrize_hecke(lambda).body))
          rec.expect(lambda_plus(nu) == lambda, where + " P has E-support outside the orbit: " + lam(nu));
      });
    }
  }
}

/// Pairs with |lambda|, |mu| <= degree_max.
inline void suite_product_support(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    const auto labels = enumerate(cfg.degree_max, n, EnumKind::compositions);
    for (std::size_t x = 0; x < labels.size(); ++x)
      for (std::size_t y = x; y < labels.size(); ++y) {
        rec.next_case();
        const auto& l = labels[x];
        const auto& m = labels[y];
        const std::string where = "n=" + std::to_string(n) + " " + lam(l) + "*" + lam(m);
        rec.guarded(where, [&] {
          const auto coeffs = b.expand_in_E_basis(b.recurse_nonsym(l).body * b.recurse_nonsym(m).body);
          for (const auto& [nu, c] : coeffs)
            rec.expect(preceq(l, nu) && preceq(m, nu), where + " support " + lam(nu), c.to_string());
        });
      }
  }
}

inline void suite_integrality(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        for (const auto& [ex, c] : b.recurse_normalized(lambda).terms()) {
          rec.expect(in_integer_laurent(c), where + " coefficient of z^" + ex.to_string(), c.to_string());
          rec.expect(in_shifted_integer_polynomial(c, (n - 1) * (lambda.size() - ex.degree())),
                     where + " refined bound at z^" + ex.to_string(), c.to_string());
        }
      });
    }
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::partitions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " sym lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        for (const auto& [ex, c] : monomial_symmetric_expand(b.normalized_sym(lambda).body)) {
          rec.expect(in_integer_laurent(c), where + " coefficient of m_" + ex.to_string(), c.to_string());
          rec.expect(in_shifted_integer_polynomial(c, (n - 1) * (lambda.size() - ex.degree())),
                     where + " refined bound at m_" + ex.to_string(), c.to_string());
        }
      });
    }
  }
}

inline void suite_classical_integrality(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const bool sym : {false, true})
      for (const auto& lambda : enumerate(cfg.degree_max, n, sym ? EnumKind::partitions : EnumKind::compositions)) {
        rec.next_case();
        const std::string where = "n=" + std::to_string(n) + (sym ? " sym" : "") + " lambda=" + lam(lambda);
        rec.guarded(where, [&] {
          const RPoly p = b.normalized_classical(lambda, sym).body;
          for (const auto& [ex, c] : p.terms())
            rec.expect(in_integer_r_polynomial(c), where + " coefficient of z^" + ex.to_string(), c.to_string());
        });
      }
  }
}

inline void suite_special_t1(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  std::mt19937_64 rng(cfg.random_seed);
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    std::vector<BigRational> qs;
    while (static_cast<int>(qs.size()) < cfg.specialization_samples) {
      const BigRational q0 = random_rational(rng);
      if (q0 != 1) qs.push_back(q0);
    }
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTPoly e = b.recurse_nonsym(lambda).body;
        for (const auto& q0 : qs) {
          const std::array<BigRational, 2> at{q0, BigRational(1)};
          const auto lhs = specialize(e, std::span<const BigRational>(at));
          rec.expect(lhs == q_factorial_product(lambda, q0), where + " q=" + q0.str(), lhs.to_string());
        }
      });
    }
  }
}

inline void suite_special_tq(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::partitions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const ZPolynomial<QField> lhs = substitute_t_power(b.symmetrize_hecke(lambda).body, 1);
        const QField q = QField::param(0);
        const ZPolynomial<QField> schur = factorial_schur(lambda);
        const ZPolynomial<QField> rhs =
            affine_substitute(schur, q.pow(n - 1), QField(0)).scaled(q.pow(-(n - 1) * lambda.size()));
        rec.expect(lhs == rhs, where + " P(z;q,q) vs factorial Schur", (lhs - rhs).to_string());
      });
    }
  }
}

inline void suite_inversion(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      rec.next_case();
      const int d = lambda.size();
      const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const QTLabeled e = b.recurse_nonsym(lambda);
        const QTPoly top = Builder::top_macdonald(e).body;
        rec.expect(b.inversion_psi(top) == e.body, where + " Psi(top part) != E");
        rec.expect(b.raise(top) == e.body.scaled(b.raise_factor(d)), where + " top(Z)(1) != raise_factor(d) E");
        for (int i = 1; i <= n; ++i) {
          const QTPoly z = apply_zi(e.body, i);
          rec.expect(z.total_degree() <= d + 1, where + " Z_i raises degree by more than one");
          rec.expect(top_homogeneous(z) == times_z(top, i).scaled(euler_scalar(n, d)), where + " top(Z_i E) != c_d z_i top(E)");
          for (const auto& [nu, c] : b.expand_in_E_basis(z))
            rec.expect(nu.size() == d + 1, where + " Z_i E leaves the degree-(d+1) block: " + lam(nu));
        }
        const RPoly et = b.interpolate_classical(lambda, false).body;
        rec.expect(b.classical_inversion(top_homogeneous(et)) == et, where + " classical Psi(top part) != E~");
      });
    }
  }
}

inline void suite_hecke_relations(const SuiteConfig& cfg, SuiteContext&, Recorder& rec) {
  std::mt19937_64 rng(cfg.random_seed);
  const QTField t = t_param();
  for (int n = 2; n <= cfg.n_max; ++n) {
    auto inputs = monomial_basis_upto<QTField>(n, cfg.degree_max);
    for (int s = 0; s < cfg.specialization_samples; ++s) inputs.push_back(random_qt_poly(rng, n, cfg.degree_max, 4));
    for (const auto& f : inputs) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " f=" + f.to_string();
      rec.guarded(where, [&] {
        for (int i = 1; i < n; ++i) {
          const std::string wi = where + " i=" + std::to_string(i);
          const QTPoly h = apply_hecke(f, i, false), hb = apply_hecke(f, i, true);
          rec.expect(h == apply_hecke_alt(f, i), wi + " two forms of H_i differ");
          rec.expect(apply_ni(f, i) == exact_divide(f - apply_si(f, i), QTPoly::variable(n, i) - QTPoly::variable(n, i + 1)),
                     wi + " divided difference");
          rec.expect(apply_hecke(h, i, false) + h - h.scaled(t) - f.scaled(t) == QTPoly(n), wi + " quadratic relation");
          rec.expect(apply_hecke(hb, i, false) == f.scaled(t), wi + " H Hbar != t");
          rec.expect(h - hb == f.scaled(t - QTField(1)), wi + " H - Hbar != t - 1");
          if (i + 1 < n) {
            const QTPoly l = apply_hecke(apply_hecke(h, i + 1, false), i, false);
            const QTPoly r = apply_hecke(apply_hecke(apply_hecke(f, i + 1, false), i, false), i + 1, false);
            rec.expect(l == r, wi + " braid relation");
          }
          for (int j = i + 2; j < n; ++j)
            rec.expect(apply_hecke(apply_hecke(f, j, false), i, false) == apply_hecke(h, j, false), wi + " far commutation");
          rec.expect(apply_hecke(apply_xi_big(f, i), i, false) == apply_xi_big(hb, i + 1), wi + " H_i Xi_i != Xi_{i+1} Hbar_i");
          for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
              rec.expect(apply_hecke(apply_xi_big(f, j), i, false) == apply_xi_big(h, j), wi + " H_i Xi_j != Xi_j H_i");
          rec.expect(apply_xi_big_recursive(f, i) == apply_xi_big(f, i), wi + " Xi recursion");
          // locality at every spectral point of size <= degree bound
          for (const auto& mu : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
            const auto p = point_bar(mu);
            auto sp = p;
            std::swap(sp[static_cast<std::size_t>(i - 1)], sp[static_cast<std::size_t>(i)]);
            const QTField& a = p[static_cast<std::size_t>(i - 1)];
            const QTField& c = p[static_cast<std::size_t>(i)];
            const QTField diff = a - c;
            const QTField c1 = (t - QTField(1)) * c / diff;
            const QTField c2 = (a - t * c) / diff;
            rec.expect(evaluate(hb, p) == c1 * evaluate(f, p) + c2 * evaluate(f, sp), wi + " locality at " + lam(mu));
            if (mu(i) == mu(i + 1)) rec.expect(c2.is_zero(), wi + " locality coefficient at " + lam(mu));
          }
        }
        for (int i = 1; i <= n; ++i) {
          const QTPoly x = apply_xi_big(f, i);
          rec.expect(is_polynomial(x) && x.total_degree() <= f.total_degree(), where + " Xi_" + std::to_string(i) + " degree");
        }
      });
    }
    // graded Hecke relations over Q(r)
    auto rinputs = monomial_basis_upto<RField>(n, cfg.degree_max);
    for (int s = 0; s < cfg.specialization_samples; ++s) rinputs.push_back(random_r_poly(rng, n, cfg.degree_max, 4));
    for (const auto& f : rinputs) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " classical f=" + f.to_string();
      rec.guarded(where, [&] {
        for (int i = 1; i < n; ++i) {
          const RPoly s = apply_sigma(f, i);
          rec.expect(apply_sigma(s, i) == f, where + " sigma^2 != 1");
          rec.expect(times_z(s, i + 1) == apply_sigma(times_z(f, i), i) - f.scaled(r_param()), where + " z sigma relation");
          if (i + 1 < n)
            rec.expect(apply_sigma(apply_sigma(s, i + 1), i) ==
                           apply_sigma(apply_sigma(apply_sigma(f, i + 1), i), i + 1),
                       where + " sigma braid");
          for (int j = i + 2; j < n; ++j)
            rec.expect(apply_sigma(apply_sigma(f, j), i) == apply_sigma(s, j), where + " sigma far commutation");
        }
      });
    }
  }
}

/// One operator limit: lift f, apply `quantum`, pull back with t = q^r, divide by (q-1)^k.
inline ZPolynomial<BigRational> operator_limit(const ZPolynomial<BigRational>& f, int r, int k,
                                               const std::function<QTPoly(const QTPoly&)>& quantum) {
  return classical_limit(quantum(lift_classical(f)), r, k);
}

inline void suite_limit(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const int r : cfg.classical_r_values) {
      // spectral points
      for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
        rec.next_case();
        const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " lambda=" + lam(lambda);
        rec.guarded(where, [&] {
          const auto bar = point_bar(lambda);
          const auto tilde = point_tilde(lambda);
          const QField q = QField::param(0);
          const std::array<BigRational, 1> at{BigRational(r)};
          for (int i = 0; i < n; ++i) {
            const QField c = substitute_t_power(bar[static_cast<std::size_t>(i)], r);
            const QField phi = (c - QField(1)) / (q - QField(1));
            rec.expect(limit_q1(phi, 0) == tilde[static_cast<std::size_t>(i)].specialize(std::span<const BigRational>(at)),
                       where + " point coordinate " + std::to_string(i + 1));
            rec.expect(limit_q1(c.inverse() - QField(1), 1) == -tilde[static_cast<std::size_t>(i)].specialize(std::span<const BigRational>(at)),
                       where + " inverse point coordinate " + std::to_string(i + 1));
          }
          const LimitOutcome e = classical_limit_check(b, lambda, r, false);
          rec.expect(e.plain, where + " E limit", e.detail);
          rec.expect(e.normalized, where + " normalized E limit", e.detail);
          if (lambda.is_partition()) {
            const LimitOutcome p = classical_limit_check(b, lambda, r, true);
            rec.expect(p.plain, where + " P limit", p.detail);
            rec.expect(p.normalized, where + " normalized P limit", p.detail);
          }
        });
      }
      // operator contracts on monomials of degree <= 2
      for (const auto& m : monomial_basis_upto<BigRational>(n, std::min(cfg.degree_max, 2))) {
        rec.next_case();
        const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " x^" + m.leading().first.to_string();
        rec.guarded(where, [&] {
          const RPoly mr = rational_to_r(m);
          auto same = [&](const ZPolynomial<BigRational>& lhs, const RPoly& rhs, const std::string& what) {
            const auto rv = at_r(rhs, r);
            rec.expect(lhs == rv, where + " " + what, lhs.to_string() + " vs " + rv.to_string());
          };
          same(operator_limit(m, r, 0, apply_delta), apply_delta_tilde(mr), "Delta limit");
          same(operator_limit(m, r, 1, apply_phi), apply_phi_tilde(mr), "Phi limit");
          for (int i = 1; i < n; ++i) {
            same(operator_limit(m, r, 0, [i](const QTPoly& f) { return apply_hecke(f, i, false); }), apply_sigma(mr, i), "H limit");
            same(operator_limit(m, r, 0, [i](const QTPoly& f) { return apply_hecke(f, i, true); }), apply_sigma(mr, i), "Hbar limit");
            same(operator_limit(m, r, 1, [i](const QTPoly& f) { return apply_hecke(f, i, false) - apply_hecke(f, i, true); }),
                 mr.scaled(r_param()), "H - Hbar limit");
          }
          for (int i = 1; i <= n; ++i) {
            same(operator_limit(m, r, 1, [i](const QTPoly& f) { return apply_xi_big(f, i) - f; }), -apply_xi_tilde(mr, i),
                 "Xi - 1 limit");
            same(operator_limit(m, r, 1, [i](const QTPoly& f) { return apply_zi(f, i); }), apply_z_tilde(mr, i), "Z limit");
          }
        });
      }
    }
  }
}

inline void suite_classical_eigen(const SuiteConfig& cfg, SuiteContext& ctx, Recorder& rec) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::compositions)) {
      const auto point = point_tilde(lambda);
      for (int i = 1; i <= n; ++i) {
        rec.next_case();
        const std::string where = "n=" + std::to_string(n) + " lambda=" + lam(lambda) + " i=" + std::to_string(i);
        rec.guarded(where, [&] {
          const RPoly e = b.interpolate_classical(lambda, false).body;
          if (i == 1) {
            rec.expect(e.total_degree() == lambda.size() && e.coefficient(lambda.exponent()).is_one(), where + " degree or leading coefficient");
            for (const auto& mu : enumerate(lambda.size(), n, EnumKind::compositions)) {
              const RField v = evaluate(e, point_tilde(mu));
              rec.expect(mu == lambda ? !v.is_zero() : v.is_zero(), where + " vanishing at " + lam(mu), v.to_string());
            }
          }
          rec.expect(apply_xi_tilde(e, i) == e.scaled(point[static_cast<std::size_t>(i - 1)]), where + " Xi~ eigen equation");
        });
      }
    }
    for (const auto& lambda : enumerate(cfg.degree_max, n, EnumKind::partitions)) {
      rec.next_case();
      const std::string where = "n=" + std::to_string(n) + " sym lambda=" + lam(lambda);
      rec.guarded(where, [&] {
        const RPoly p = b.interpolate_classical(lambda, true).body;
        const auto point = point_tilde(lambda);
        rec.expect(is_symmetric(p), where + " P~ not symmetric");
        RPoly e1(n);
        RField v1(0);
        for (int i = 1; i <= n; ++i) {
          e1 += apply_xi_tilde(p, i);
          v1 += point[static_cast<std::size_t>(i - 1)];
        }
        rec.expect(e1 == p.scaled(v1), where + " e_1(Xi~) eigenvalue");
        for (const auto& mu : enumerate(lambda.size(), n, EnumKind::partitions)) {
          const RField v = evaluate(p, point_tilde(mu));
          rec.expect(mu == lambda ? !v.is_zero() : v.is_zero(), where + " vanishing at " + lam(mu), v.to_string());
        }
      });
    }
  }
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg, SuiteContext& ctx) {
  using Fn = void (*)(const SuiteConfig&, SuiteContext&, detail::Recorder&);
  static const std::map<std::string, Fn> table{
      {"vanishing", detail::suite_vanishing},
      {"eigen", detail::suite_eigen},
      {"commutativity", detail::suite_commutativity},
      {"triangularity", detail::suite_triangularity},
      {"extra_vanishing", detail::suite_extra_vanishing},
      {"ideal_basis", detail::suite_ideal_basis},
      {"product_support", detail::suite_product_support},
      {"integrality", detail::suite_integrality},
      {"special_t1", detail::suite_special_t1},
      {"special_tq", detail::suite_special_tq},
      {"inversion", detail::suite_inversion},
      {"hecke_relations", detail::suite_hecke_relations},
      {"limit", detail::suite_limit},
      {"classical_eigen", detail::suite_classical_eigen},
      {"classical_integrality", detail::suite_classical_integrality},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UnknownSuite("unknown suite: " + name);
  if (cfg.n_max < 0 || cfg.degree_max < 0 || cfg.extra_degree < 0 || cfg.specialization_samples < 0)
    throw std::invalid_argument("suite bounds must be non-negative");
  SuiteReport report;
  report.name = name;
  detail::Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  it->second(cfg, ctx, rec);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteContext ctx;
  return run_suite(name, cfg, ctx);
}

}  // namespace capelli
