#pragma once

// Builders for the polynomial families. The recursion through the raising
// operators is the main route for E; interpolation is kept as an
// independent route and the two must agree.

#include "capelli/interpolation.hpp"
#include "capelli/ops.hpp"
#include "capelli/weights.hpp"
#include "capelli/zpoly.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

enum class Family { E, P, EE_norm, P_norm, E_bar, P_bar, E_tilde, P_tilde, EE_tilde_norm, P_tilde_norm };
enum class Route { recursion, interpolation, symmetrization, limit };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::P: return "P";
    case Family::EE_norm: return "EE";
    case Family::P_norm: return "PP";
    case Family::E_bar: return "Ebar";
    case Family::P_bar: return "Pbar";
    case Family::E_tilde: return "Etilde";
    case Family::P_tilde: return "Ptilde";
    case Family::EE_tilde_norm: return "EEtilde";
    case Family::P_tilde_norm: return "PPtilde";
  }
  return "?";
}

inline std::string to_string(Route r) {
  switch (r) {
    case Route::recursion: return "recursion";
    case Route::interpolation: return "interpolation";
    case Route::symmetrization: return "symmetrization";
    case Route::limit: return "limit";
  }
  return "?";
}

inline bool is_symmetric_family(Family f) {
  return f == Family::P || f == Family::P_norm || f == Family::P_bar || f == Family::P_tilde ||
         f == Family::P_tilde_norm;
}
inline bool is_classical_family(Family f) {
  return f == Family::E_tilde || f == Family::P_tilde || f == Family::EE_tilde_norm || f == Family::P_tilde_norm;
}

template <class C>
struct LabeledPolynomial {
  Family family;
  Composition lambda;
  int n = 0;
  ZPolynomial<C> body;
  Route route;
};

using QTLabeled = LabeledPolynomial<QTField>;
using RLabeled = LabeledPolynomial<RField>;

/// [z_i; k]_q = (z_i - 1)(z_i - q)...(z_i - q^{k-1}) over the coefficient type of `one`.
template <class C, class PowFn>
ZPolynomial<C> q_shifted_factorial(int n, int i, int k, PowFn q_power) {
  ZPolynomial<C> r = ZPolynomial<C>::constant(n, C(1));
  for (int m = 0; m < k; ++m) r *= ZPolynomial<C>::variable(n, i) - ZPolynomial<C>::constant(n, q_power(m));
  return r;
}

/// All families in a fixed number of variables, memoized.
class Builder {
 public:
  explicit Builder(int n) : n_(n) {
    if (n < 1 || n > kMaxVariables) throw std::invalid_argument("Builder: n out of range");
  }
  int n() const { return n_; }

  // ---- non-symmetric, quantum

  /// The normalized E built by the raising recursion.
  const QTPoly& recurse_normalized(const Composition& lambda) {
    check(lambda);
    if (auto it = normalized_.find(lambda); it != normalized_.end()) return it->second;
    QTPoly result(n_);
    const int m = lambda.length();
    if (m == 0) {
      result = QTPoly::constant(n_, QTField(1));
    } else {
      const QTPoly prev = recurse_normalized(star_truncated(lambda));
      const QTField bar_m = point_bar(lambda)[static_cast<std::size_t>(m - 1)];
      result = apply_am(prev, m, true) - apply_am(prev, m, false).scaled(bar_m * qt_monomial(0, m));
      result = result.scaled(qt_monomial(lambda(m) - 1, 0));
    }
    return normalized_.emplace(lambda, std::move(result)).first->second;
  }

  QTLabeled normalized_nonsym(const Composition& lambda) {
    return {Family::EE_norm, lambda, n_, recurse_normalized(lambda), Route::recursion};
  }

  QTLabeled recurse_nonsym(const Composition& lambda) {
    if (auto it = e_rec_.find(lambda); it != e_rec_.end()) return {Family::E, lambda, n_, it->second, Route::recursion};
    QTPoly e = recurse_normalized(lambda).scaled(norm_factor(lambda, NormKind::nonsym).inverse());
    e_rec_.emplace(lambda, e);
    return {Family::E, lambda, n_, std::move(e), Route::recursion};
  }

  QTLabeled interpolate_nonsym(const Composition& lambda) {
    check(lambda);
    return {Family::E, lambda, n_, nonsym_interp().polynomial(lambda), Route::interpolation};
  }

  // ---- symmetric, quantum

  QTLabeled interpolate_sym(const Composition& lambda) {
    check(lambda);
    if (!lambda.is_partition()) throw std::invalid_argument("interpolate_sym: lambda must be a partition");
    return {Family::P, lambda, n_, sym_interp().polynomial(lambda), Route::interpolation};
  }

  /// Sum over w of H_w applied to the normalized E, rescaled to be monic at m_lambda.
  QTLabeled symmetrize_hecke(const Composition& lambda) {
    check(lambda);
    if (!lambda.is_partition()) throw std::invalid_argument("symmetrize_hecke: lambda must be a partition");
    if (auto it = p_sym_.find(lambda); it != p_sym_.end())
      return {Family::P, lambda, n_, it->second, Route::symmetrization};
    const QTPoly& seed = recurse_normalized(lambda);
    QTPoly sum(n_);
    for (const auto& w : all_permutations(n_)) {
      QTPoly g = seed;
      const auto word = min_reduced_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_hecke(g, *it, false);
      sum += g;
    }
    if (sum.is_zero()) throw std::logic_error("Hecke symmetrizer annihilated the seed");
    if (!is_symmetric(sum)) throw std::logic_error("Hecke symmetrizer output is not symmetric");
    const QTField lead = sum.coefficient(lambda.exponent());
    if (lead.is_zero()) throw std::logic_error("Hecke symmetrizer output has no m_lambda term");
    QTPoly p = sum.scaled(lead.inverse());
    p_sym_.emplace(lambda, p);
    return {Family::P, lambda, n_, std::move(p), Route::symmetrization};
  }

  QTLabeled normalized_sym(const Composition& lambda) {
    QTLabeled p = symmetrize_hecke(lambda);
    return {Family::P_norm, lambda, n_, p.body.scaled(norm_factor(lambda, NormKind::sym)), p.route};
  }

  // ---- top parts

  static QTLabeled top_macdonald(const QTLabeled& p) {
    if (p.family != Family::E && p.family != Family::P)
      throw std::invalid_argument("top_macdonald: expects an E or P polynomial");
    return {p.family == Family::E ? Family::E_bar : Family::P_bar, p.lambda, p.n, top_homogeneous(p.body), p.route};
  }

  // ---- expansion and inversion

  /// Coefficients of f on the E basis: Newton by increasing degree, then an
  /// exact reconstruction check.
  std::map<Composition, QTField> expand_in_E_basis(const QTPoly& f) {
    if (f.nvars() != n_) throw std::invalid_argument("expand_in_E_basis: wrong number of variables");
    if (!is_polynomial(f)) throw std::invalid_argument("expand_in_E_basis: Laurent input");
    std::map<Composition, QTField> coeffs;
    if (f.is_zero()) return coeffs;
    const auto labels = enumerate(f.total_degree(), n_, EnumKind::compositions);
    std::vector<std::pair<Composition, QTField>> done;
    for (const auto& nu : labels) {
      const auto nu_point = point_bar(nu);
      QTField val = evaluate(f, nu_point);
      for (const auto& [prev, c] : done)
        if (prev.size() < nu.size()) val -= c * evaluate(e_basis(prev), nu_point);
      if (val.is_zero()) continue;
      const QTField c = val / evaluate(e_basis(nu), nu_point);
      done.emplace_back(nu, c);
    }
    QTPoly check(n_);
    for (const auto& [nu, c] : done) {
      check += e_basis(nu).scaled(c);
      coeffs.emplace(nu, c);
    }
    if (!(check == f)) throw std::logic_error("expand_in_E_basis: reconstruction mismatch");
    return coeffs;
  }

  /// fbar(Z_1, ..., Z_n)(1) for homogeneous fbar, unscaled.
  QTPoly raise(const QTPoly& fbar) {
    if (fbar.nvars() != n_) throw std::invalid_argument("raise: wrong number of variables");
    QTPoly out(n_);
    for (const auto& [e, c] : fbar.terms()) {
      if (!e.is_polynomial()) throw std::invalid_argument("raise: Laurent input");
      out += raised_monomial(e).scaled(c);
    }
    return out;
  }

  /// fbar(Z)(1) = raise_factor(d) * Psi(fbar) for fbar homogeneous of degree d.
  QTField raise_factor(int d) const {
    QTField f(1);
    for (int e = 0; e < d; ++e) f *= euler_scalar(n_, e);
    return f;
  }

  QTPoly inversion_psi(const QTPoly& fbar) {
    if (fbar.is_zero()) return fbar;
    if (!is_homogeneous(fbar)) throw std::invalid_argument("inversion_psi: input must be homogeneous");
    return raise(fbar).scaled(raise_factor(fbar.total_degree()).inverse());
  }

  // ---- classical family

  RLabeled interpolate_classical(const Composition& lambda, bool sym) {
    check(lambda);
    if (sym && !lambda.is_partition()) throw std::invalid_argument("interpolate_classical: lambda must be a partition");
    auto& interp = sym ? classical_sym() : classical_nonsym();
    return {sym ? Family::P_tilde : Family::E_tilde, lambda, n_, interp.polynomial(lambda), Route::interpolation};
  }

  RLabeled normalized_classical(const Composition& lambda, bool sym) {
    RLabeled p = interpolate_classical(lambda, sym);
    const RField f = norm_factor_classical(lambda, sym ? NormKind::sym : NormKind::nonsym);
    return {sym ? Family::P_tilde_norm : Family::EE_tilde_norm, lambda, n_, p.body.scaled(f), p.route};
  }

  /// fbar(Z~_1, ..., Z~_n)(1).
  RPoly classical_inversion(const RPoly& fbar) {
    if (fbar.nvars() != n_) throw std::invalid_argument("classical_inversion: wrong number of variables");
    RPoly out(n_);
    for (const auto& [e, c] : fbar.terms()) {
      RPoly g = RPoly::constant(n_, RField(1));
      for (int i = n_; i >= 1; --i)
        for (int k = 0; k < e[i - 1]; ++k) g = apply_z_tilde(g, i);
      out += g.scaled(c);
    }
    return out;
  }

  NewtonInterpolator<QTField>& nonsym_interp() {
    if (!interp_e_) interp_e_ = std::make_unique<NewtonInterpolator<QTField>>(quantum_interpolator(n_, false));
    return *interp_e_;
  }
  NewtonInterpolator<QTField>& sym_interp() {
    if (!interp_p_) interp_p_ = std::make_unique<NewtonInterpolator<QTField>>(quantum_interpolator(n_, true));
    return *interp_p_;
  }
  NewtonInterpolator<RField>& classical_nonsym() {
    if (!interp_et_) interp_et_ = std::make_unique<NewtonInterpolator<RField>>(classical_interpolator(n_, false));
    return *interp_et_;
  }
  NewtonInterpolator<RField>& classical_sym() {
    if (!interp_pt_) interp_pt_ = std::make_unique<NewtonInterpolator<RField>>(classical_interpolator(n_, true));
    return *interp_pt_;
  }

 private:
  void check(const Composition& lambda) const {
    if (lambda.n() != n_)
      throw std::invalid_argument("composition " + lambda.to_string() + " does not have " + std::to_string(n_) + " parts");
  }

  const QTPoly& e_basis(const Composition& nu) {
    if (auto it = e_rec_.find(nu); it != e_rec_.end()) return it->second;
    recurse_nonsym(nu);
    return e_rec_.at(nu);
  }

  const QTPoly& raised_monomial(const ExponentVector& e) {
    if (auto it = raised_.find(e); it != raised_.end()) return it->second;
    QTPoly g(n_);
    if (e.degree() == 0) {
      g = QTPoly::constant(n_, QTField(1));
    } else {
      // peel one factor from the last nonzero position
      int i = n_;
      while (e[i - 1] == 0) --i;
      ExponentVector rest = e;
      rest[i - 1] -= 1;
      g = apply_zi(raised_monomial(rest), i);
    }
    return raised_.emplace(e, std::move(g)).first->second;
  }

  int n_;
  std::map<Composition, QTPoly> normalized_;
  std::map<Composition, QTPoly> e_rec_;
  std::map<Composition, QTPoly> p_sym_;
  std::map<ExponentVector, QTPoly> raised_;
  std::unique_ptr<NewtonInterpolator<QTField>> interp_e_, interp_p_;
  std::unique_ptr<NewtonInterpolator<RField>> interp_et_, interp_pt_;
};

/// Determinant over the q-shifted factorials divided by the Vandermonde.
inline ZPolynomial<QField> factorial_schur(const Composition& lambda) {
  if (!lambda.is_partition()) throw std::invalid_argument("factorial_schur: lambda must be a partition");
  const int n = lambda.n();
  using QPoly = ZPolynomial<QField>;
  auto q_pow = [](int m) { return QField::monomial({m}); };
  QPoly det(n);
  for (const auto& w : all_permutations(n)) {
    QPoly term = QPoly::constant(n, QField(w.length() % 2 ? -1 : 1));
    for (int j = 1; j <= n; ++j) term *= q_shifted_factorial<QField>(n, w(j), lambda(j) + n - j, q_pow);
    det += term;
  }
  QPoly vandermonde = QPoly::constant(n, QField(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) vandermonde *= QPoly::variable(n, i) - QPoly::variable(n, j);
  return exact_divide(det, vandermonde);
}

/// prod_i [z_i; lambda_i]_q with q specialized.
inline ZPolynomial<BigRational> q_factorial_product(const Composition& lambda, const BigRational& q0) {
  const int n = lambda.n();
  ZPolynomial<BigRational> r = ZPolynomial<BigRational>::constant(n, BigRational(1));
  auto q_pow = [&](int m) { return ipow(q0, static_cast<unsigned>(m)); };
  for (int i = 1; i <= n; ++i) r *= q_shifted_factorial<BigRational>(n, i, lambda(i), q_pow);
  return r;
}

/// (q-1)^{-k} f((q-1)z + 1) with t = q^r, limited coefficientwise at q = 1.
inline ZPolynomial<BigRational> classical_limit(const QTPoly& f, int r, int k) {
  const ZPolynomial<QField> sub = substitute_t_power(f, r);
  const QField q = QField::param(0);
  const ZPolynomial<QField> conj = affine_substitute(sub, q - QField(1), QField(1));
  return conj.map_coefficients<BigRational>([k](const QField& c) { return limit_q1(c, k); });
}

/// Coefficientwise value of an r-polynomial at an integer r.
inline ZPolynomial<BigRational> at_r(const RPoly& f, int r) {
  const std::array<BigRational, 1> at{BigRational(r)};
  return f.map_coefficients<BigRational>([&](const RField& c) { return c.specialize(std::span<const BigRational>(at)); });
}

struct LimitOutcome {
  bool plain = false;       // E ->^{|lambda|} E~
  bool normalized = false;  // EE ->^{2|lambda|} (-1)^{|lambda|} EE~
  std::string detail;
};

/// Both limit statements for lambda at integer r; sym selects the P family.
inline LimitOutcome classical_limit_check(Builder& b, const Composition& lambda, int r, bool sym = false) {
  LimitOutcome out;
  const int d = lambda.size();
  try {
    const QTPoly e = sym ? b.symmetrize_hecke(lambda).body : b.recurse_nonsym(lambda).body;
    const QTPoly ee = sym ? b.normalized_sym(lambda).body : b.recurse_normalized(lambda);
    const RPoly et = b.interpolate_classical(lambda, sym).body;
    const RPoly eet = b.normalized_classical(lambda, sym).body;
    out.plain = classical_limit(e, r, d) == at_r(et, r);
    const BigRational sign = d % 2 ? BigRational(-1) : BigRational(1);
    out.normalized = classical_limit(ee, r, 2 * d) == at_r(eet, r).scaled(sign);
  } catch (const LimitDoesNotExist& ex) {
    out.detail = ex.what();
  }
  return out;
}

}  // namespace capelli
