#pragma once

// Sparse Laurent polynomials with rational coefficients in one or two
// parameters (q,t or r). Terms are kept sorted by descending graded
// lexicographic order of the exponent vectors; no zero coefficient is ever
// stored, so the empty term list is the zero polynomial.

#include "capelli/params.hpp"
#include "capelli/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

template <ParameterSet P>
class ParamPolynomial {
 public:
  static constexpr std::size_t kVars = P::kSize;
  using Params = P;
  using Exponent = std::array<int, kVars>;

  struct Term {
    Exponent exp{};
    BigRational coef;
    bool operator==(const Term&) const = default;
  };

  ParamPolynomial() = default;
  ParamPolynomial(const BigRational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back({Exponent{}, c});
  }
  ParamPolynomial(long c) : ParamPolynomial(BigRational(c)) {}  // NOLINT

  static ParamPolynomial monomial(const Exponent& e, const BigRational& c = BigRational(1)) {
    ParamPolynomial p;
    if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
  }

  static ParamPolynomial variable(std::size_t i) {
    Exponent e{};
    e.at(i) = 1;
    return monomial(e);
  }

  /// Builds a polynomial from arbitrary terms: combines duplicates, drops zeros.
  static ParamPolynomial from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return greater(a.exp, b.exp); });
    ParamPolynomial p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
        p.terms_.back().coef += t.coef;
        if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      } else if (!t.coef.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static int total_degree(const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

  /// Graded lexicographic comparison: true iff a > b.
  static bool greater(const Exponent& a, const Exponent& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{}); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coef == 1; }
  const Term& leading() const { return terms_.front(); }
  BigRational constant_term() const {
    for (const auto& t : terms_)
      if (t.exp == Exponent{}) return t.coef;
    return BigRational(0);
  }

  int total_degree() const { return terms_.empty() ? -1 : total_degree(terms_.front().exp); }

  int degree(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp[var]);
    return d;
  }

  Exponent min_exponents() const {
    Exponent m{};
    if (terms_.empty()) return m;
    m = terms_.front().exp;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kVars; ++i) m[i] = std::min(m[i], t.exp[i]);
    return m;
  }

  bool is_polynomial() const {
    for (const auto& t : terms_)
      for (int x : t.exp)
        if (x < 0) return false;
    return true;
  }

  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.coef); });
  }

  /// Multiplies by the monomial with exponent `by`.
  ParamPolynomial shifted(const Exponent& by) const {
    ParamPolynomial r = *this;
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < kVars; ++i) t.exp[i] += by[i];
    return r;  // shifting preserves grlex order among terms of equal shift
  }

  ParamPolynomial scaled(const BigRational& c) const {
    if (c.is_zero()) return {};
    ParamPolynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  ParamPolynomial operator-() const {
    ParamPolynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend ParamPolynomial operator+(const ParamPolynomial& a, const ParamPolynomial& b) {
    return merge(a, b, false);
  }
  friend ParamPolynomial operator-(const ParamPolynomial& a, const ParamPolynomial& b) {
    return merge(a, b, true);
  }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.shifted(a.leading().exp).scaled(a.leading().coef);
    if (b.is_monomial()) return a.shifted(b.leading().exp).scaled(b.leading().coef);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < kVars; ++i) e[i] = x.exp[i] + y.exp[i];
        prod.push_back({e, x.coef * y.coef});
      }
    return from_terms(std::move(prod));
  }
  ParamPolynomial& operator+=(const ParamPolynomial& b) { return *this = *this + b; }
  ParamPolynomial& operator-=(const ParamPolynomial& b) { return *this = *this - b; }
  ParamPolynomial& operator*=(const ParamPolynomial& b) { return *this = *this * b; }

  bool operator==(const ParamPolynomial&) const = default;

  ParamPolynomial pow(unsigned k) const {
    ParamPolynomial result(1), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  /// Exact quotient if `d` divides this polynomial in the Laurent ring,
  /// std::nullopt otherwise.
  std::optional<ParamPolynomial> divide_exact(const ParamPolynomial& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return ParamPolynomial{};
    if (d.is_monomial()) {
      Exponent neg = d.leading().exp;
      for (int& x : neg) x = -x;
      return shifted(neg).scaled(1 / d.leading().coef);
    }
    // Normalize both to genuine polynomials, divide, undo the shift.
    const Exponent mf = min_exponents(), md = d.min_exponents();
    Exponent nf, nd, back;
    for (std::size_t i = 0; i < kVars; ++i) {
      nf[i] = -mf[i];
      nd[i] = -md[i];
      back[i] = mf[i] - md[i];
    }
    ParamPolynomial r = shifted(nf);
    const ParamPolynomial dd = d.shifted(nd);
    const Term& lt = dd.leading();
    std::vector<Term> quotient;
    while (!r.is_zero()) {
      const Term& rt = r.leading();
      Exponent e;
      for (std::size_t i = 0; i < kVars; ++i) {
        e[i] = rt.exp[i] - lt.exp[i];
        if (e[i] < 0) return std::nullopt;
      }
      const BigRational c = rt.coef / lt.coef;
      quotient.push_back({e, c});
      r -= dd.shifted(e).scaled(c);
    }
    return from_terms(std::move(quotient)).shifted(back);
  }

  /// Value at a rational point; throws std::domain_error on 0^(negative).
  BigRational evaluate(std::span<const BigRational> at) const {
    if (at.size() != kVars) throw std::invalid_argument("evaluate: wrong number of parameter values");
    BigRational sum(0);
    for (const auto& t : terms_) {
      BigRational v = t.coef;
      for (std::size_t i = 0; i < kVars; ++i) {
        int e = t.exp[i];
        if (e == 0) continue;
        if (at[i].is_zero()) {
          if (e < 0) throw std::domain_error("evaluate: negative power of zero");
          v = 0;
          break;
        }
        BigRational base = e > 0 ? at[i] : 1 / at[i];
        v *= ipow(base, static_cast<unsigned>(e > 0 ? e : -e));
      }
      sum += v;
    }
    return sum;
  }

  /// Reindexes exponents into another parameter set.
  template <ParameterSet To>
  ParamPolynomial<To> map_exponents(
      const std::function<typename ParamPolynomial<To>::Exponent(const Exponent&)>& fn) const {
    std::vector<typename ParamPolynomial<To>::Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({fn(t.exp), t.coef});
    return ParamPolynomial<To>::from_terms(std::move(ts));
  }

  /// Human-readable form such as "q^2*t - 3/2*t + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      BigRational c = t.coef;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      const bool unit_monomial = t.exp == Exponent{};
      bool wrote = false;
      if (c != 1 || unit_monomial) {
        os << c.str();
        wrote = true;
      }
      for (std::size_t i = 0; i < kVars; ++i) {
        if (t.exp[i] == 0) continue;
        if (wrote) os << '*';
        os << P::kNames[i];
        if (t.exp[i] != 1) os << '^' << t.exp[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  static ParamPolynomial merge(const ParamPolynomial& a, const ParamPolynomial& b, bool subtract) {
    ParamPolynomial r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && greater(a.terms_[i].exp, b.terms_[j].exp))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || greater(b.terms_[j].exp, a.terms_[i].exp)) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coef = -r.terms_.back().coef;
      } else {
        BigRational c = subtract ? a.terms_[i].coef - b.terms_[j].coef : a.terms_[i].coef + b.terms_[j].coef;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace capelli
