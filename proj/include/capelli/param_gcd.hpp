#pragma once

// Greatest common divisors of parameter polynomials in at most two
// variables. After monomial content is split off, the inputs are cleared to
// integer polynomials in dense form. The univariate case runs a primitive
// remainder sequence over Z; the bivariate case views the inputs as
// polynomials in the lower-degree variable with coefficients in Z[other]
// and runs the subresultant remainder sequence.

#include "capelli/param_poly.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace capelli {

namespace detail {

// Dense univariate polynomial over Z, index = degree, no trailing zeros.
using ZUni = std::vector<BigInt>;
// Dense polynomial in a main variable with coefficients in Z[y].
using ZBi = std::vector<ZUni>;

inline void trim(ZUni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}
inline void trim(ZBi& b) {
  while (!b.empty() && b.back().empty()) b.pop_back();
}
inline int deg(const ZUni& u) { return static_cast<int>(u.size()) - 1; }
inline int deg(const ZBi& b) { return static_cast<int>(b.size()) - 1; }

inline ZUni uni_sub(const ZUni& a, const ZUni& b) {
  ZUni r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZUni uni_mul(const ZUni& a, const ZUni& b) {
  if (a.empty() || b.empty()) return {};
  ZUni r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline ZUni uni_pow(ZUni base, unsigned k) {
  ZUni r{BigInt(1)};
  while (k) {
    if (k & 1u) r = uni_mul(r, base);
    k >>= 1u;
    if (k) base = uni_mul(base, base);
  }
  return r;
}

inline BigInt uni_content(const ZUni& u) {
  BigInt g = 0;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient.
inline ZUni uni_primitive(ZUni u) {
  if (u.empty()) return u;
  BigInt c = uni_content(u);
  if (u.back() < 0) c = -c;
  if (c != 1)
    for (auto& x : u) x /= c;
  return u;
}

/// Exact quotient a / b over Z; empty optional-like flag via `ok`.
inline ZUni uni_divexact(ZUni a, const ZUni& b, bool& ok) {
  ok = true;
  if (b.empty()) throw std::domain_error("uni_divexact: division by zero");
  if (a.empty()) return {};
  if (deg(a) < deg(b)) {
    ok = false;
    return {};
  }
  ZUni q(a.size() - b.size() + 1);
  const BigInt& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    BigInt qc, rem;
    boost::multiprecision::divide_qr(a.back(), lb, qc, rem);
    if (rem != 0) {
      ok = false;
      return {};
    }
    const std::size_t shift = a.size() - b.size();
    q[shift] = qc;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= qc * b[j];
    trim(a);
  }
  if (!a.empty()) ok = false;
  trim(q);
  return q;
}

inline ZUni uni_divexact(const ZUni& a, const ZUni& b) {
  bool ok = false;
  ZUni q = uni_divexact(a, b, ok);
  if (!ok) throw std::logic_error("uni_divexact: inexact division");
  return q;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline ZUni uni_prem(ZUni a, const ZUni& b) {
  if (deg(a) < deg(b)) return a;
  int e = deg(a) - deg(b) + 1;
  const BigInt& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
    --e;
  }
  if (e > 0) {
    BigInt f = ipow(lb, static_cast<unsigned>(e));
    for (auto& x : a) x *= f;
  }
  return a;
}

/// Primitive gcd over Z[y] (integer content dropped), positive leading coefficient.
inline ZUni uni_gcd(ZUni a, ZUni b) {
  a = uni_primitive(std::move(a));
  b = uni_primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) return ZUni{BigInt(1)};
    ZUni r = uni_prem(a, b);
    a = std::move(b);
    b = uni_primitive(std::move(r));
  }
  return uni_primitive(std::move(a));
}

inline ZUni bi_content(const ZBi& b) {
  ZUni g;
  for (const auto& c : b) {
    if (c.empty()) continue;
    g = g.empty() ? uni_primitive(c) : uni_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

inline ZBi bi_divexact_uni(const ZBi& b, const ZUni& u) {
  ZBi r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i].empty() ? ZUni{} : uni_divexact(b[i], u);
  return r;
}

inline ZBi bi_prem(ZBi a, const ZBi& b) {
  if (deg(a) < deg(b)) return a;
  int e = deg(a) - deg(b) + 1;
  const ZUni lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const ZUni la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = uni_mul(x, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = uni_sub(a[shift + j], uni_mul(la, b[j]));
    trim(a);
    --e;
  }
  if (e > 0) {
    const ZUni f = uni_pow(lb, static_cast<unsigned>(e));
    for (auto& x : a) x = uni_mul(x, f);
  }
  return a;
}

/// Primitive part in the main variable with positive leading integer.
inline ZBi bi_primitive(const ZBi& b) {
  if (b.empty()) return b;
  ZUni c = bi_content(b);
  ZBi r = bi_divexact_uni(b, c);
  // clear any integer content left over and fix the sign
  BigInt ic = 0;
  for (const auto& u : r) ic = gcd(ic, uni_content(u));
  if (r.back().back() < 0) ic = -ic;
  if (ic != 1)
    for (auto& u : r)
      for (auto& x : u) x /= ic;
  return r;
}

/// Subresultant remainder sequence gcd in Z[y][x], result primitive.
inline ZBi bi_gcd(ZBi a, ZBi b) {
  if (a.empty()) return bi_primitive(b);
  if (b.empty()) return bi_primitive(a);
  const ZUni ca = bi_content(a), cb = bi_content(b);
  const ZUni cg = uni_gcd(ca, cb);
  a = bi_divexact_uni(a, ca);
  b = bi_divexact_uni(b, cb);
  if (deg(a) < deg(b)) std::swap(a, b);
  ZBi result;
  if (deg(b) == 0) {
    result = ZBi{ZUni{BigInt(1)}};
  } else {
    ZUni g{BigInt(1)}, h{BigInt(1)};
    for (;;) {
      const int delta = deg(a) - deg(b);
      ZBi r = bi_prem(a, b);
      if (r.empty()) {
        result = bi_primitive(b);
        break;
      }
      if (deg(r) == 0) {
        result = ZBi{ZUni{BigInt(1)}};
        break;
      }
      a = std::move(b);
      const ZUni divisor = uni_mul(g, uni_pow(h, static_cast<unsigned>(delta)));
      b = bi_divexact_uni(r, divisor);
      g = a.back();
      if (delta == 1) {
        h = g;
      } else if (delta > 1) {
        h = uni_divexact(uni_pow(g, static_cast<unsigned>(delta)), uni_pow(h, static_cast<unsigned>(delta - 1)));
      }
    }
  }
  result = bi_primitive(result);
  for (auto& u : result) u = uni_mul(u, cg);
  return result;
}

/// Scales to an integer polynomial whose coefficients are coprime, with a
/// positive leading coefficient in graded lexicographic order.
template <ParameterSet P>
ParamPolynomial<P> primitive_normalized(const ParamPolynomial<P>& p) {
  if (p.is_zero()) return p;
  BigInt l = 1;
  for (const auto& t : p.terms()) l = lcm(l, den_of(t.coef));
  BigInt c = 0;
  for (const auto& t : p.terms()) c = gcd(c, num_of(t.coef) * (l / den_of(t.coef)));
  BigRational s(l, c);
  if (p.leading().coef < 0) s = -s;
  return s == 1 ? p : p.scaled(s);
}

template <ParameterSet P>
ZUni to_uni(const ParamPolynomial<P>& p, std::size_t var) {
  const auto s = primitive_normalized(p);
  ZUni u(static_cast<std::size_t>(s.degree(var) + 1));
  for (const auto& t : s.terms()) u[static_cast<std::size_t>(t.exp[var])] = num_of(t.coef);
  trim(u);
  return u;
}

template <ParameterSet P>
ZBi to_bi(const ParamPolynomial<P>& p, std::size_t main, std::size_t other) {
  const auto s = primitive_normalized(p);
  ZBi b(static_cast<std::size_t>(s.degree(main) + 1));
  const std::size_t od = static_cast<std::size_t>(s.degree(other) + 1);
  for (auto& u : b) u.assign(od, BigInt(0));
  for (const auto& t : s.terms())
    b[static_cast<std::size_t>(t.exp[main])][static_cast<std::size_t>(t.exp[other])] = num_of(t.coef);
  for (auto& u : b) trim(u);
  trim(b);
  return b;
}

template <ParameterSet P>
bool proportional(const ParamPolynomial<P>& a, const ParamPolynomial<P>& b) {
  if (a.size() != b.size() || a.is_zero()) return false;
  const BigRational ratio = a.leading().coef / b.leading().coef;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.terms()[i];
    const auto& y = b.terms()[i];
    if (x.exp != y.exp || x.coef != ratio * y.coef) return false;
  }
  return true;
}

}  // namespace detail

/// Greatest common divisor over Q: the result is an integer polynomial with
/// coprime coefficients and positive leading coefficient. gcd(a, 0) is the
/// normalized a. Laurent inputs are accepted; monomial factors are treated
/// as units only when negative exponents are present in both inputs.
template <ParameterSet P>
ParamPolynomial<P> param_gcd(const ParamPolynomial<P>& a, const ParamPolynomial<P>& b) {
  using Poly = ParamPolynomial<P>;
  using Exponent = typename Poly::Exponent;
  if (a.is_zero()) return detail::primitive_normalized(b);
  if (b.is_zero()) return detail::primitive_normalized(a);

  const Exponent ma = a.min_exponents(), mb = b.min_exponents();
  Exponent common, na, nb;
  for (std::size_t i = 0; i < P::kSize; ++i) {
    common[i] = std::min(ma[i], mb[i]);
    na[i] = -ma[i];
    nb[i] = -mb[i];
  }
  const Poly monomial_part = Poly::monomial(common);
  if (a.is_monomial() || b.is_monomial()) return monomial_part;

  const Poly ar = a.shifted(na), br = b.shifted(nb);
  if (ar.is_constant() || br.is_constant()) return monomial_part;
  if (detail::proportional(ar, br)) return detail::primitive_normalized(br) * monomial_part;

  // Cheap trial division by a short candidate (binomial factors are common).
  const Poly& small = ar.size() <= br.size() ? ar : br;
  const Poly& large = ar.size() <= br.size() ? br : ar;
  if (small.size() <= 3 && small.total_degree() <= large.total_degree()) {
    if (large.divide_exact(small)) return detail::primitive_normalized(small) * monomial_part;
  }

  Poly g;
  if constexpr (P::kSize == 1) {
    const detail::ZUni u = detail::uni_gcd(detail::to_uni(ar, 0), detail::to_uni(br, 0));
    std::vector<typename Poly::Term> ts;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) ts.push_back({Exponent{static_cast<int>(i)}, BigRational(u[i])});
    g = Poly::from_terms(std::move(ts));
  } else {
    const int d0 = std::max(ar.degree(0), br.degree(0));
    const int d1 = std::max(ar.degree(1), br.degree(1));
    const std::size_t main = d0 <= d1 ? 0 : 1;
    const std::size_t other = 1 - main;
    const detail::ZBi r = detail::bi_gcd(detail::to_bi(ar, main, other), detail::to_bi(br, main, other));
    std::vector<typename Poly::Term> ts;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r[i].size(); ++j) {
        if (r[i][j] == 0) continue;
        Exponent e{};
        e[main] = static_cast<int>(i);
        e[other] = static_cast<int>(j);
        ts.push_back({e, BigRational(r[i][j])});
      }
    g = Poly::from_terms(std::move(ts));
  }
  return detail::primitive_normalized(g) * monomial_part;
}

}  // namespace capelli
