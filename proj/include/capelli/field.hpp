#pragma once

// Exact rational functions in the parameters. An element is a reduced
// fraction num/den of genuine polynomials (monomial factors are cleared
// into the denominator), and the denominator is an integer polynomial with
// coprime coefficients and positive graded-lex leading coefficient. This
// representation is unique, so equality is structural.

#include "capelli/param_gcd.hpp"
#include "capelli/param_poly.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// Raised when a specialization hits a pole or an exact division has no
/// inverse (the parameters are not generic for the requested operation).
class DegenerateSpecialization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by limit_q1 when the order of vanishing at q = 1 is too small.
class LimitDoesNotExist : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <ParameterSet P>
class RationalFunction {
 public:
  using Poly = ParamPolynomial<P>;
  using Exponent = typename Poly::Exponent;
  using Params = P;

  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& laurent) { *this = from_laurent(laurent); }  // NOLINT

  /// The i-th parameter (q = 0, t = 1 for the (q,t) field).
  static RationalFunction param(std::size_t i) { return RationalFunction(Poly::variable(i)); }

  /// c * param^e with possibly negative exponents.
  static RationalFunction monomial(const Exponent& e, const BigRational& c = BigRational(1)) {
    return from_laurent(Poly::monomial(e, c));
  }

  static RationalFunction from_laurent(const Poly& p) {
    RationalFunction r;
    if (p.is_zero()) return r;
    Exponent m = p.min_exponents(), up{}, den_exp{};
    for (std::size_t i = 0; i < P::kSize; ++i) {
      up[i] = m[i] < 0 ? -m[i] : 0;
      den_exp[i] = up[i];
    }
    r.num_ = p.shifted(up);
    r.den_ = Poly::monomial(den_exp);
    r.reduce_monomial_content();
    return r;
  }

  /// num/den in canonical form; throws DegenerateSpecialization if den = 0.
  static RationalFunction fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DegenerateSpecialization("rational function with zero denominator");
    RationalFunction a = from_laurent(num), b = from_laurent(den);
    return a / b;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// True iff the denominator is a monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent_polynomial() const { return den_.is_monomial(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Laurent polynomial num / den when the denominator is a monomial.
  Poly as_laurent() const {
    if (!is_laurent_polynomial()) throw std::logic_error("as_laurent: denominator is not a monomial");
    Exponent neg = den_.leading().exp;
    for (int& x : neg) x = -x;
    return num_.shifted(neg).scaled(1 / den_.leading().coef);
  }

  BigRational constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value: not a constant");
    return num_.constant_term() / den_.constant_term();
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, false);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, true);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, Poly(1));
    const Poly g1 = param_gcd(a.num_, b.den_);
    const Poly g2 = param_gcd(b.num_, a.den_);
    const Poly n = quot(a.num_, g1) * quot(b.num_, g2);
    const Poly d = quot(a.den_, g2) * quot(b.den_, g1);
    return raw(n, d);
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  bool operator==(const RationalFunction&) const = default;

  RationalFunction inverse() const {
    if (is_zero()) throw DegenerateSpecialization("division by zero in the parameter field");
    RationalFunction r;
    // den is primitive with positive leading coefficient; move the scalar to num.
    const Poly new_den = detail::primitive_normalized(num_);
    const BigRational s = num_.leading().coef / new_den.leading().coef;
    r.num_ = den_.scaled(1 / s);
    r.den_ = new_den;
    return r;
  }

  RationalFunction pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction result(1), base = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Exact value at a rational point.
  BigRational specialize(std::span<const BigRational> at) const {
    const BigRational d = den_.evaluate(at);
    if (d.is_zero()) throw DegenerateSpecialization("specialization at a pole: " + to_string());
    return num_.evaluate(at) / d;
  }

  BigRational specialize(const std::map<std::string, BigRational>& assignment) const {
    std::vector<BigRational> at;
    for (auto name : P::kNames) {
      auto it = assignment.find(std::string(name));
      if (it == assignment.end()) throw std::invalid_argument("missing value for parameter " + std::string(name));
      at.push_back(it->second);
    }
    return specialize(std::span<const BigRational>(at));
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  /// Builds from an already reduced pair, only fixing the scalar normalization.
  static RationalFunction raw(Poly n, Poly d) {
    RationalFunction r;
    if (n.is_zero()) return r;
    const Poly nd = detail::primitive_normalized(d);
    if (!(nd == d)) {
      const BigRational s = d.leading().coef / nd.leading().coef;
      n = n.scaled(1 / s);
      d = nd;
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

 private:
  static Poly quot(const Poly& a, const Poly& g) {
    if (g.is_one()) return a;
    auto q = a.divide_exact(g);
    if (!q) throw std::logic_error("parameter gcd does not divide its argument");
    return *std::move(q);
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_.is_one() && b.den_.is_one()) return raw(subtract ? a.num_ - b.num_ : a.num_ + b.num_, Poly(1));
    if (a.den_ == b.den_) {
      const Poly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (n.is_zero()) return {};
      const Poly g = param_gcd(n, a.den_);
      return raw(quot(n, g), quot(a.den_, g));
    }
    const Poly g1 = param_gcd(a.den_, b.den_);
    const Poly ad = quot(a.den_, g1), bd = quot(b.den_, g1);
    const Poly n = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return {};
    if (g1.is_one()) return raw(n, a.den_ * bd);
    const Poly g2 = param_gcd(n, g1);
    return raw(quot(n, g2), ad * quot(b.den_, g2));
  }

  void reduce_monomial_content() {
    const Exponent mn = num_.min_exponents(), md = den_.min_exponents();
    Exponent cut{};
    bool any = false;
    for (std::size_t i = 0; i < P::kSize; ++i) {
      cut[i] = -std::min(mn[i], md[i]);
      any = any || cut[i] != 0;
    }
    if (any) {
      num_ = num_.shifted(cut);
      den_ = den_.shifted(cut);
    }
  }

  Poly num_;
  Poly den_;
};

using QTField = RationalFunction<QT>;
using QField = RationalFunction<Q>;
using RField = RationalFunction<R>;

/// Four-function helper mirroring the field operations.
enum class ArithKind { add, sub, mul, div };

template <ParameterSet P>
RationalFunction<P> field_arith(const RationalFunction<P>& a, const RationalFunction<P>& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
  }
  throw std::invalid_argument("field_arith: unknown kind");
}

inline QTField q_param() { return QTField::param(0); }
inline QTField t_param() { return QTField::param(1); }
inline RField r_param() { return RField::param(0); }

/// q^a t^b in the (q,t) field; negative exponents allowed.
inline QTField qt_monomial(int a, int b) { return QTField::monomial({a, b}); }

/// Substitutes t -> q^r, landing in the field of rational functions in q.
inline QField substitute_t_power(const QTField& a, int r) {
  if (r < 0) throw std::invalid_argument("substitute_t_power: exponent must be non-negative");
  auto map = [r](const std::array<int, 2>& e) {
    return ParamPolynomial<Q>::Exponent{e[0] + r * e[1]};
  };
  const auto n = a.num().template map_exponents<Q>(map);
  const auto d = a.den().template map_exponents<Q>(map);
  if (d.is_zero()) throw DegenerateSpecialization("substitute_t_power: denominator vanishes");
  return QField::fraction(n, d);
}

namespace detail {

// Splits off the largest power of (q - 1) dividing a univariate polynomial
// in q; returns the multiplicity and the cofactor value at q = 1.
inline std::pair<int, BigRational> order_at_one(const ParamPolynomial<Q>& p) {
  const ParamPolynomial<Q> q_minus_one = ParamPolynomial<Q>::variable(0) - ParamPolynomial<Q>(1);
  ParamPolynomial<Q> cur = p;
  int order = 0;
  const std::array<BigRational, 1> one{BigRational(1)};
  for (;;) {
    const BigRational v = cur.evaluate(one);
    if (!v.is_zero()) return {order, v};
    auto next = cur.divide_exact(q_minus_one);
    if (!next) throw std::logic_error("order_at_one: (q-1) should divide a polynomial vanishing at 1");
    cur = *std::move(next);
    ++order;
  }
}

}  // namespace detail

/// Exact value of a / (q-1)^k at q = 1.
inline BigRational limit_q1(const QField& a, int k) {
  if (k < 0) throw std::invalid_argument("limit_q1: k must be non-negative");
  if (a.is_zero()) return BigRational(0);
  const auto [on, vn] = detail::order_at_one(a.num());
  const auto [od, vd] = detail::order_at_one(a.den());
  const int order = on - od;
  if (order < k)
    throw LimitDoesNotExist("limit_q1: order of vanishing " + std::to_string(order) + " < " + std::to_string(k));
  if (order > k) return BigRational(0);
  return vn / vd;
}

}  // namespace capelli
