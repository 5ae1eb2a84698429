#pragma once

// Sparse Laurent polynomials in z_1..z_n over an exact coefficient field
// (RationalFunction<P> or BigRational). Terms live in a map ordered by
// descending graded lexicographic order, so the first term is the leading
// term and the top homogeneous part is a prefix of the map.

#include "capelli/field.hpp"
#include "capelli/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

inline constexpr int kMaxVariables = 8;

/// Raised when an exact division leaves a remainder; always an upstream bug.
class DivisibilityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent vector of a z-monomial; entries may be negative in Laurent context.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int n) : n_(check(n)) {}
  ExponentVector(std::initializer_list<int> e) : n_(check(static_cast<int>(e.size()))) {
    std::copy(e.begin(), e.end(), e_.begin());
  }
  explicit ExponentVector(std::span<const int> e) : n_(check(static_cast<int>(e.size()))) {
    std::copy(e.begin(), e.end(), e_.begin());
  }

  int size() const { return n_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const { return {e_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<int> to_vector() const { return {e_.begin(), e_.begin() + n_}; }

  int degree() const { return std::accumulate(e_.begin(), e_.begin() + n_, 0); }
  bool is_polynomial() const {
    return std::all_of(e_.begin(), e_.begin() + n_, [](int x) { return x >= 0; });
  }
  bool is_partition() const {
    for (int i = 0; i + 1 < n_; ++i)
      if (e_[static_cast<std::size_t>(i)] < e_[static_cast<std::size_t>(i + 1)]) return false;
    return n_ == 0 || e_[static_cast<std::size_t>(n_ - 1)] >= 0;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    for (int i = 0; i < a.n_; ++i) a[i] += b[i];
    return a;
  }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    for (int i = 0; i < a.n_; ++i) a[i] -= b[i];
    return a;
  }

  bool operator==(const ExponentVector& o) const {
    return n_ == o.n_ && std::equal(e_.begin(), e_.begin() + n_, o.e_.begin());
  }
  /// Lexicographic order on the entries (used for map keys outside grlex).
  std::strong_ordering operator<=>(const ExponentVector& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (int i = 0; i < n_; ++i)
      if (auto c = e_[static_cast<std::size_t>(i)] <=> o.e_[static_cast<std::size_t>(i)]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(e_[static_cast<std::size_t>(i)]);
    return s + ")";
  }

 private:
  static int check(int n) {
    if (n < 0 || n > kMaxVariables)
      throw std::invalid_argument("number of variables must be in [0, " + std::to_string(kMaxVariables) + "]");
    return n;
  }
  std::array<int, kMaxVariables> e_{};
  int n_ = 0;
};

/// Descending graded lexicographic order.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a > b;
  }
};

// Uniform power for the two coefficient kinds.
template <ParameterSet P>
RationalFunction<P> field_pow(const RationalFunction<P>& x, int k) {
  return x.pow(k);
}
inline BigRational field_pow(const BigRational& x, int k) {
  if (k >= 0) return ipow(x, static_cast<unsigned>(k));
  if (x.is_zero()) throw DegenerateSpecialization("negative power of zero");
  return ipow(BigRational(1) / x, static_cast<unsigned>(-k));
}

template <class C>
class ZPolynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<ExponentVector, C, GrlexGreater>;

  ZPolynomial() = default;
  explicit ZPolynomial(int n) : n_(n) { (void)ExponentVector(n); }

  static ZPolynomial constant(int n, const C& c) {
    ZPolynomial p(n);
    p.add_term(ExponentVector(n), c);
    return p;
  }
  /// z_i with 1-based i.
  static ZPolynomial variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    ExponentVector e(n);
    e[i - 1] = 1;
    return term(e, C(1));
  }
  static ZPolynomial term(const ExponentVector& e, const C& c) {
    ZPolynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  const std::pair<const ExponentVector, C>& leading() const { return *terms_.begin(); }

  C coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const ExponentVector& e, const C& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent vector length does not match n");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ZPolynomial operator-() const {
    ZPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) {
    a += b;
    return a;
  }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) {
    a -= b;
    return a;
  }
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) { return multiply(a, b, -1); }

  ZPolynomial& operator+=(const ZPolynomial& b) {
    same_n(b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  ZPolynomial& operator-=(const ZPolynomial& b) {
    same_n(b);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
  }
  ZPolynomial& operator*=(const ZPolynomial& b) { return *this = *this * b; }

  /// Product, dropping every term of total degree above `max_degree` when
  /// max_degree >= 0.
  static ZPolynomial multiply(const ZPolynomial& a, const ZPolynomial& b, int max_degree) {
    a.same_n(b);
    ZPolynomial r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        if (max_degree >= 0 && ea.degree() + eb.degree() > max_degree) continue;
        r.add_term(ea + eb, ca * cb);
      }
    return r;
  }

  ZPolynomial scaled(const C& s) const {
    ZPolynomial r(n_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  /// Multiplication by the monomial z^e.
  ZPolynomial shifted(const ExponentVector& by) const {
    ZPolynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  bool operator==(const ZPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  template <class D, class Fn>
  ZPolynomial<D> map_coefficients(Fn&& fn) const {
    ZPolynomial<D> r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_string(c) << ")";
      for (int i = 0; i < n_; ++i)
        if (e[i] != 0) os << "*z" << (i + 1) << (e[i] != 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
  }

 private:
  template <ParameterSet P>
  static std::string coeff_string(const RationalFunction<P>& c) {
    return c.to_string();
  }
  static std::string coeff_string(const BigRational& c) { return c.str(); }

  void same_n(const ZPolynomial& b) const {
    if (b.n_ != n_) throw std::invalid_argument("polynomials in different numbers of variables");
  }

  int n_ = 0;
  TermMap terms_;
};

using QTPoly = ZPolynomial<QTField>;
using RPoly = ZPolynomial<RField>;

/// A point of coefficient-field values, one per variable.
template <class C>
using SpectralPoint = std::vector<C>;

enum class PolyArithKind { add, sub, mul };

template <class C>
ZPolynomial<C> zp_arith(const ZPolynomial<C>& f, const ZPolynomial<C>& g, PolyArithKind kind) {
  switch (kind) {
    case PolyArithKind::add: return f + g;
    case PolyArithKind::sub: return f - g;
    case PolyArithKind::mul: return f * g;
  }
  throw std::invalid_argument("zp_arith: unknown kind");
}

template <class C>
bool is_polynomial(const ZPolynomial<C>& f) {
  for (const auto& [e, c] : f.terms())
    if (!e.is_polynomial()) return false;
  return true;
}

template <class C>
C evaluate(const ZPolynomial<C>& f, const SpectralPoint<C>& p) {
  if (static_cast<int>(p.size()) != f.nvars()) throw std::invalid_argument("evaluate: point has wrong dimension");
  std::vector<std::map<int, C>> powers(p.size());
  auto power = [&](std::size_t i, int k) -> const C& {
    auto it = powers[i].find(k);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(k, field_pow(p[i], k)).first->second;
  };
  C sum(0);
  for (const auto& [e, c] : f.terms()) {
    C v = c;
    for (int i = 0; i < f.nvars(); ++i)
      if (e[i] != 0) v *= power(static_cast<std::size_t>(i), e[i]);
    sum += v;
  }
  return sum;
}

/// Exact quotient f / g; throws DivisibilityViolation on a nonzero remainder.
template <class C>
ZPolynomial<C> exact_divide(const ZPolynomial<C>& f, const ZPolynomial<C>& g) {
  if (g.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("exact_divide: mismatched n");
  ZPolynomial<C> quotient(f.nvars());
  if (f.is_zero()) return quotient;
  if (g.size() == 1) {
    const auto& [eg, cg] = g.leading();
    ExponentVector neg(g.nvars());
    for (int i = 0; i < g.nvars(); ++i) neg[i] = -eg[i];
    return f.shifted(neg).scaled(C(1) / cg);
  }
  ZPolynomial<C> r = f;
  const auto [eg, cg] = g.leading();
  // Laurent inputs: reduce exponents so that the leading-term test works in
  // the polynomial ring, then shift the quotient back.
  ExponentVector shift_f(f.nvars()), shift_g(g.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    int mf = 0, mg = 0;
    for (const auto& [e, c] : f.terms()) mf = std::min(mf, e[i]);
    for (const auto& [e, c] : g.terms()) mg = std::min(mg, e[i]);
    shift_f[i] = -mf;
    shift_g[i] = -mg;
  }
  r = r.shifted(shift_f);
  const ZPolynomial<C> gg = g.shifted(shift_g);
  const auto& [lg, lc] = gg.leading();
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading();
    ExponentVector e = er - lg;
    if (!e.is_polynomial()) throw DivisibilityViolation("exact_divide: nonzero remainder");
    const C c = cr / lc;
    quotient.add_term(e, c);
    r -= gg.shifted(e).scaled(c);
  }
  return quotient.shifted(shift_g - shift_f);
}

/// Sum of the terms of a given total degree.
template <class C>
ZPolynomial<C> homogeneous_part(const ZPolynomial<C>& f, int degree) {
  ZPolynomial<C> r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (e.degree() == degree) r.add_term(e, c);
  return r;
}

template <class C>
ZPolynomial<C> top_homogeneous(const ZPolynomial<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("top_homogeneous: zero polynomial");
  return homogeneous_part(f, f.total_degree());
}

template <class C>
bool is_homogeneous(const ZPolynomial<C>& f) {
  return f.is_zero() || homogeneous_part(f, f.total_degree()).size() == f.size();
}

/// f(g_1, ..., g_n); every g_i must have the same variable count. A
/// negative power requires g_i to be a single term.
template <class C>
ZPolynomial<C> compose(const ZPolynomial<C>& f, const std::vector<ZPolynomial<C>>& subs) {
  if (static_cast<int>(subs.size()) != f.nvars()) throw std::invalid_argument("compose: wrong number of substitutes");
  const int m = subs.empty() ? f.nvars() : subs.front().nvars();
  std::vector<std::map<int, ZPolynomial<C>>> powers(subs.size());
  auto power = [&](std::size_t i, int k) -> const ZPolynomial<C>& {
    auto& cache = powers[i];
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    ZPolynomial<C> v;
    if (k == 0) {
      v = ZPolynomial<C>::constant(m, C(1));
    } else if (k < 0) {
      if (subs[i].size() != 1) throw std::domain_error("compose: negative power of a non-monomial");
      const auto& [e, c] = subs[i].leading();
      ExponentVector ne(m);
      for (int j = 0; j < m; ++j) ne[j] = e[j] * k;
      v = ZPolynomial<C>::term(ne, field_pow(c, k));
    } else {
      // cache[j] for 1 <= j < k is filled bottom-up
      v = subs[i];
      for (int j = 2; j <= k; ++j) {
        auto jt = cache.find(j);
        if (jt != cache.end()) {
          v = jt->second;
          continue;
        }
        v = v * subs[i];
        cache.emplace(j, v);
      }
      if (k == 1) cache.emplace(1, v);
      return cache.at(k);
    }
    return cache.emplace(k, std::move(v)).first->second;
  };
  ZPolynomial<C> out(m);
  for (const auto& [e, c] : f.terms()) {
    ZPolynomial<C> t = ZPolynomial<C>::constant(m, c);
    for (int i = 0; i < f.nvars(); ++i)
      if (e[i] != 0) t *= power(static_cast<std::size_t>(i), e[i]);
    out += t;
  }
  return out;
}

/// Replaces every z_i by scale * z_i + shift.
template <class C>
ZPolynomial<C> affine_substitute(const ZPolynomial<C>& f, const C& scale, const C& shift) {
  if (scale.is_zero()) throw std::invalid_argument("affine_substitute: zero scale");
  std::vector<ZPolynomial<C>> subs;
  for (int i = 1; i <= f.nvars(); ++i)
    subs.push_back(ZPolynomial<C>::variable(f.nvars(), i).scaled(scale) +
                   ZPolynomial<C>::constant(f.nvars(), shift));
  return compose(f, subs);
}

/// Exchanges z_i and z_{i+1} (1-based i).
template <class C>
ZPolynomial<C> swap_adjacent(const ZPolynomial<C>& f, int i) {
  if (i < 1 || i >= f.nvars()) throw std::out_of_range("adjacent transposition index out of range");
  ZPolynomial<C> r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector s = e;
    std::swap(s[i - 1], s[i]);
    r.add_term(s, c);
  }
  return r;
}

template <class C>
bool is_symmetric(const ZPolynomial<C>& f) {
  for (int i = 1; i < f.nvars(); ++i)
    if (!(swap_adjacent(f, i) == f)) return false;
  return true;
}

/// m_lambda: the sum of the distinct rearrangements of z^lambda.
template <class C>
ZPolynomial<C> monomial_symmetric(const ExponentVector& lambda) {
  std::vector<int> v = lambda.to_vector();
  std::sort(v.begin(), v.end());
  ZPolynomial<C> r(lambda.size());
  do {
    r.add_term(ExponentVector(std::span<const int>(v)), C(1));
  } while (std::next_permutation(v.begin(), v.end()));
  return r;
}

/// Coefficients on the monomial symmetric basis, keyed by partition.
template <class C>
std::map<ExponentVector, C, GrlexGreater> monomial_symmetric_expand(const ZPolynomial<C>& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("monomial_symmetric_expand: polynomial is not symmetric");
  std::map<ExponentVector, C, GrlexGreater> out;
  for (const auto& [e, c] : f.terms())
    if (e.is_partition()) out.emplace(e, c);
  return out;
}

template <class C>
ZPolynomial<C> from_monomial_symmetric(int n, const std::map<ExponentVector, C, GrlexGreater>& coeffs) {
  ZPolynomial<C> r(n);
  for (const auto& [lambda, c] : coeffs) r += monomial_symmetric<C>(lambda).scaled(c);
  return r;
}

/// Coefficient-wise specialization of the parameters.
template <ParameterSet P>
ZPolynomial<BigRational> specialize(const ZPolynomial<RationalFunction<P>>& f, std::span<const BigRational> at) {
  return f.template map_coefficients<BigRational>([&](const RationalFunction<P>& c) { return c.specialize(at); });
}

/// Coefficient-wise t -> q^r.
inline ZPolynomial<QField> substitute_t_power(const QTPoly& f, int r) {
  return f.map_coefficients<QField>([r](const QTField& c) { return substitute_t_power(c, r); });
}

}  // namespace capelli
