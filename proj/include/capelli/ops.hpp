#pragma once

// Difference-reflection operators on z-polynomials. Operator words are
// applied right to left as written: H_1...H_{i-1} f means H_{i-1} first.
// Quantum operators work over Q(q,t), classical ones over Q(r).

#include "capelli/field.hpp"
#include "capelli/weights.hpp"
#include "capelli/zpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

namespace detail {

inline void check_reflection_index(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("reflection index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}
inline void check_cherednik_index(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("operator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}

inline int binomial2(int n) { return n * (n - 1) / 2; }

}  // namespace detail

template <class C>
ZPolynomial<C> apply_si(const ZPolynomial<C>& f, int i) {
  detail::check_reflection_index(f.nvars(), i);
  return swap_adjacent(f, i);
}

/// (1 - s_i)/(z_i - z_{i+1}), termwise via the geometric sum.
template <class C>
ZPolynomial<C> apply_ni(const ZPolynomial<C>& f, int i) {
  detail::check_reflection_index(f.nvars(), i);
  ZPolynomial<C> r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1], b = e[i];
    if (a == b) continue;
    const int lo = std::min(a, b), span = std::abs(a - b);
    const C coef = a > b ? c : -c;
    ExponentVector m = e;
    for (int k = 0; k < span; ++k) {
      m[i - 1] = lo + k;
      m[i] = lo + span - 1 - k;
      r.add_term(m, coef);
    }
  }
  return r;
}

/// Multiplication by z_i (1-based), exponent `power` (may be negative).
template <class C>
ZPolynomial<C> times_z(const ZPolynomial<C>& f, int i, int power = 1) {
  ExponentVector e(f.nvars());
  e[i - 1] = power;
  return f.shifted(e);
}

// ---- quantum operators over Q(q,t)

/// H_i = t s_i - (1-t) z_i N_i, or with bar: s_i - (1-t) z_{i+1} N_i.
inline QTPoly apply_hecke(const QTPoly& f, int i, bool bar) {
  detail::check_reflection_index(f.nvars(), i);
  const QTField t = t_param();
  const QTField one_minus_t = QTField(1) - t;
  const QTPoly n = apply_ni(f, i);
  if (bar) return swap_adjacent(f, i) - times_z(n, i + 1).scaled(one_minus_t);
  return swap_adjacent(f, i).scaled(t) - times_z(n, i).scaled(one_minus_t);
}

/// The other displayed form s_i - (1-t) N_i z_i.
inline QTPoly apply_hecke_alt(const QTPoly& f, int i) {
  detail::check_reflection_index(f.nvars(), i);
  return swap_adjacent(f, i) - apply_ni(times_z(f, i), i).scaled(QTField(1) - t_param());
}

/// f(z_n/q, z_1, ..., z_{n-1}).
inline QTPoly apply_delta(const QTPoly& f) {
  const int n = f.nvars();
  QTPoly r(n);
  if (n == 0) return f;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector m(n);
    for (int j = 1; j < n; ++j) m[j - 1] = e[j];
    m[n - 1] = e[0];
    r.add_term(m, c * qt_monomial(-e[0], 0));
  }
  return r;
}

/// (z_n - t^{1-n}) Delta.
inline QTPoly apply_phi(const QTPoly& f) {
  const int n = f.nvars();
  const QTPoly d = apply_delta(f);
  return times_z(d, n) - d.scaled(qt_monomial(0, 1 - n));
}

/// H_a H_{a+1} ... H_b f (bar selects H-bar); empty when a > b.
inline QTPoly apply_hecke_run(QTPoly f, int a, int b, bool bar) {
  for (int j = b; j >= a; --j) f = apply_hecke(f, j, bar);
  return f;
}

/// H-bar_i ... H-bar_{n-1} Delta H_1 ... H_{i-1}.
inline QTPoly apply_xi_inv(const QTPoly& f, int i) {
  const int n = f.nvars();
  detail::check_cherednik_index(n, i);
  QTPoly g = apply_hecke_run(f, 1, i - 1, false);
  g = apply_delta(g);
  return apply_hecke_run(std::move(g), i, n - 1, true);
}

/// H_i ... H_{n-1} Phi H_1 ... H_{i-1}, which equals z_i Xi_i - 1.
inline QTPoly apply_raising_word(const QTPoly& f, int i) {
  const int n = f.nvars();
  detail::check_cherednik_index(n, i);
  QTPoly g = apply_hecke_run(f, 1, i - 1, false);
  g = apply_phi(g);
  return apply_hecke_run(std::move(g), i, n - 1, false);
}

/// z_i^{-1} f + z_i^{-1} H_i...H_{n-1} Phi H_1...H_{i-1} f; the Laurent result must be polynomial.
inline QTPoly apply_xi_big(const QTPoly& f, int i) {
  QTPoly r = times_z(f + apply_raising_word(f, i), i, -1);
  if (!is_polynomial(r)) throw std::logic_error("Xi_" + std::to_string(i) + " produced negative exponents");
  return r;
}

/// t^{-1} H-bar_i Xi_{i+1} H-bar_i, the alternative route to Xi_i (i < n).
inline QTPoly apply_xi_big_recursive(const QTPoly& f, int i) {
  detail::check_reflection_index(f.nvars(), i);
  QTPoly g = apply_hecke(f, i, true);
  g = apply_xi_big(g, i + 1);
  g = apply_hecke(g, i, true);
  return g.scaled(t_param().inverse());
}

/// t^{C(n,2)} (H_i...Phi...H_{i-1}) composed with the product of Xi_j, j != i.
inline QTPoly apply_zi(const QTPoly& f, int i) {
  const int n = f.nvars();
  detail::check_cherednik_index(n, i);
  QTPoly g = f;
  for (int j = n; j >= 1; --j)
    if (j != i) g = apply_xi_big(g, j);
  g = apply_raising_word(g, i);
  return g.scaled(qt_monomial(0, detail::binomial2(n)));
}

/// A_m = H_m...H_{n-1} Phi; bar selects the H-bar word.
inline QTPoly apply_am(const QTPoly& f, int m, bool bar) {
  const int n = f.nvars();
  detail::check_cherednik_index(n, m);
  return apply_hecke_run(apply_phi(f), m, n - 1, bar);
}

/// t^{C(n,2)} Xi_1 ... Xi_n.
/// Scalar by which S acts on polynomials of degree d: q^{-d} t^{2 C(n,2)}.
/// Z_i multiplies top parts of degree d by the same scalar times z_i.
inline QTField euler_scalar(int n, int d) { return qt_monomial(-d, 2 * detail::binomial2(n)); }

inline QTPoly apply_euler_s(const QTPoly& f) {
  const int n = f.nvars();
  QTPoly g = f;
  for (int j = n; j >= 1; --j) g = apply_xi_big(g, j);
  return g.scaled(qt_monomial(0, detail::binomial2(n)));
}

// ---- classical operators over Q(r)

/// s_i + r N_i, the q -> 1 image of H_i and H-bar_i.
inline RPoly apply_sigma(const RPoly& f, int i) {
  detail::check_reflection_index(f.nvars(), i);
  return swap_adjacent(f, i) + apply_ni(f, i).scaled(r_param());
}

/// f(z_n - 1, z_1, ..., z_{n-1}).
inline RPoly apply_delta_tilde(const RPoly& f) {
  const int n = f.nvars();
  if (n == 0) return f;
  std::vector<RPoly> subs;
  subs.push_back(RPoly::variable(n, n) - RPoly::constant(n, RField(1)));
  for (int j = 1; j < n; ++j) subs.push_back(RPoly::variable(n, j));
  return compose(f, subs);
}

/// (z_n + (n-1) r) Delta-tilde.
inline RPoly apply_phi_tilde(const RPoly& f) {
  const int n = f.nvars();
  const RPoly d = apply_delta_tilde(f);
  return times_z(d, n) + d.scaled(RField(n - 1) * r_param());
}

/// sigma_i ... sigma_{n-1} Phi-tilde sigma_1 ... sigma_{i-1}.
inline RPoly apply_z_tilde(const RPoly& f, int i) {
  const int n = f.nvars();
  detail::check_cherednik_index(n, i);
  RPoly g = f;
  for (int j = i - 1; j >= 1; --j) g = apply_sigma(g, j);
  g = apply_phi_tilde(g);
  for (int j = n - 1; j >= i; --j) g = apply_sigma(g, j);
  return g;
}

/// z_i f - Z-tilde_i f.
inline RPoly apply_xi_tilde(const RPoly& f, int i) { return times_z(f, i) - apply_z_tilde(f, i); }

// ---- tagged dispatch

enum class OperatorKind {
  Si, Ni, Hi, HbarI, Delta, Phi, XiInvSmall, XiBig, Zi, Am, AbarM, EulerS,
  SigmaI, DeltaTilde, PhiTilde, XiTilde, ZTilde
};

struct OperatorTag {
  OperatorKind kind;
  std::optional<int> index;

  static bool indexed(OperatorKind k) {
    switch (k) {
      case OperatorKind::Delta:
      case OperatorKind::Phi:
      case OperatorKind::EulerS:
      case OperatorKind::DeltaTilde:
      case OperatorKind::PhiTilde: return false;
      default: return true;
    }
  }
  static bool reflection_type(OperatorKind k) {
    return k == OperatorKind::Si || k == OperatorKind::Ni || k == OperatorKind::Hi || k == OperatorKind::HbarI ||
           k == OperatorKind::SigmaI;
  }
  static bool classical(OperatorKind k) {
    return k == OperatorKind::SigmaI || k == OperatorKind::DeltaTilde || k == OperatorKind::PhiTilde ||
           k == OperatorKind::XiTilde || k == OperatorKind::ZTilde;
  }

  void validate(int n) const {
    if (indexed(kind) != index.has_value()) throw std::invalid_argument("operator tag index presence mismatch");
    if (!index) return;
    if (reflection_type(kind))
      detail::check_reflection_index(n, *index);
    else
      detail::check_cherednik_index(n, *index);
  }
};

inline QTPoly apply(const OperatorTag& tag, const QTPoly& f) {
  tag.validate(f.nvars());
  if (OperatorTag::classical(tag.kind)) throw std::invalid_argument("classical operator applied over Q(q,t)");
  const int i = tag.index.value_or(0);
  switch (tag.kind) {
    case OperatorKind::Si: return apply_si(f, i);
    case OperatorKind::Ni: return apply_ni(f, i);
    case OperatorKind::Hi: return apply_hecke(f, i, false);
    case OperatorKind::HbarI: return apply_hecke(f, i, true);
    case OperatorKind::Delta: return apply_delta(f);
    case OperatorKind::Phi: return apply_phi(f);
    case OperatorKind::XiInvSmall: return apply_xi_inv(f, i);
    case OperatorKind::XiBig: return apply_xi_big(f, i);
    case OperatorKind::Zi: return apply_zi(f, i);
    case OperatorKind::Am: return apply_am(f, i, false);
    case OperatorKind::AbarM: return apply_am(f, i, true);
    case OperatorKind::EulerS: return apply_euler_s(f);
    default: break;
  }
  throw std::logic_error("unhandled operator kind");
}

inline RPoly apply_classical(const RPoly& f, const OperatorTag& tag) {
  tag.validate(f.nvars());
  const int i = tag.index.value_or(0);
  switch (tag.kind) {
    case OperatorKind::SigmaI: return apply_sigma(f, i);
    case OperatorKind::DeltaTilde: return apply_delta_tilde(f);
    case OperatorKind::PhiTilde: return apply_phi_tilde(f);
    case OperatorKind::XiTilde: return apply_xi_tilde(f, i);
    case OperatorKind::ZTilde: return apply_z_tilde(f, i);
    case OperatorKind::Si: return apply_si(f, i);
    case OperatorKind::Ni: return apply_ni(f, i);
    default: break;
  }
  throw std::invalid_argument("quantum operator applied over Q(r)");
}

}  // namespace capelli
