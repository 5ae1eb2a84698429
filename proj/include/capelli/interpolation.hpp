#pragma once

// Degree-by-degree Newton interpolation on spectral points. At level d each
// basis function of degree d is first reduced against the interpolants of
// lower degree (so it vanishes on all lower points), then the square block
// of values at the level-d points is inverted exactly. Column lambda of the
// inverse gives the interpolant that is 1 at lambda and 0 at the other
// level-d points; dividing by its coefficient at z^lambda makes it monic.

#include "capelli/linalg.hpp"
#include "capelli/weights.hpp"
#include "capelli/zpoly.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// The points fail to determine a unique interpolant.
class SingularSystem : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class C>
class NewtonInterpolator {
 public:
  using Poly = ZPolynomial<C>;
  using PointFn = std::function<SpectralPoint<C>(const Composition&)>;
  using BasisFn = std::function<Poly(const Composition&)>;

  NewtonInterpolator(int n, EnumKind kind, PointFn point, BasisFn basis)
      : n_(n), kind_(kind), point_(std::move(point)), basis_(std::move(basis)) {}

  int n() const { return n_; }

  /// The monic interpolant attached to lambda.
  const Poly& polynomial(const Composition& lambda) {
    return entry(lambda).poly;
  }
  /// Its value at its own point; nonzero by construction.
  const C& self_value(const Composition& lambda) { return entry(lambda).self_value; }

  /// det of the reduced level-d block (the full evaluation matrix on the
  /// points of size <= d has determinant equal to the product over levels).
  const C& level_determinant(int d) {
    build_to(d);
    return dets_.at(static_cast<std::size_t>(d));
  }

  /// E_nu(mu-bar) for |nu| < |mu| (memoized), or the exact value otherwise.
  C value(const Composition& nu, const Composition& mu) {
    if (nu.size() < mu.size()) {
      build_to(mu.size());
      return cross_.at({nu, mu});
    }
    if (nu == mu) return self_value(nu);
    if (mu.size() <= nu.size()) return C(0);
    return evaluate(polynomial(nu), point_of(mu));
  }

  const std::vector<Composition>& labels(int d) {
    build_to(d);
    return labels_.at(static_cast<std::size_t>(d));
  }

 private:
  struct Entry {
    Poly poly;
    C self_value;
  };

  const Entry& entry(const Composition& lambda) {
    if (lambda.n() != n_) throw std::invalid_argument("interpolator: composition of wrong length");
    if (kind_ == EnumKind::partitions && !lambda.is_partition())
      throw std::invalid_argument("interpolator: symmetric interpolation needs a partition");
    build_to(lambda.size());
    return entries_.at(lambda);
  }

  const SpectralPoint<C>& point_of(const Composition& mu) {
    auto it = points_.find(mu);
    if (it == points_.end()) it = points_.emplace(mu, point_(mu)).first;
    return it->second;
  }

  void build_to(int d) {
    while (static_cast<int>(labels_.size()) <= d) build_level(static_cast<int>(labels_.size()));
  }

  void build_level(int d) {
    const std::vector<Composition> level = enumerate_size(d, n_, kind_);
    std::vector<Composition> lower;
    for (const auto& l : labels_) lower.insert(lower.end(), l.begin(), l.end());

    // Values of the lower interpolants at the new points.
    for (const auto& nu : lower)
      for (const auto& mu : level) cross_.emplace(std::make_pair(nu, mu), evaluate(entries_.at(nu).poly, point_of(mu)));

    const std::size_t m = level.size();
    std::vector<Poly> basis;
    std::vector<std::vector<C>> newton(m);  // newton[a][index in lower]
    Matrix<C> block(m, std::vector<C>(m, C(0)));
    for (std::size_t a = 0; a < m; ++a) {
      basis.push_back(basis_(level[a]));
      std::vector<C>& c = newton[a];
      c.reserve(lower.size());
      for (std::size_t v = 0; v < lower.size(); ++v) {
        const Composition& nu = lower[v];
        C val = evaluate(basis[a], point_of(nu));
        for (std::size_t w = 0; w < v; ++w) {
          if (c[w].is_zero() || lower[w].size() >= nu.size()) continue;
          const C& e = cross_.at({lower[w], nu});
          if (!e.is_zero()) val -= c[w] * e;
        }
        c.push_back(val.is_zero() ? C(0) : val / entries_.at(nu).self_value);
      }
      for (std::size_t r = 0; r < m; ++r) {
        C val = evaluate(basis[a], point_of(level[r]));
        for (std::size_t v = 0; v < lower.size(); ++v) {
          if (c[v].is_zero()) continue;
          const C& e = cross_.at({lower[v], level[r]});
          if (!e.is_zero()) val -= c[v] * e;
        }
        block[r][a] = val;
      }
    }

    auto inv = invert(block);
    if (!inv) throw SingularSystem("interpolation block at degree " + std::to_string(d) + " is singular");
    dets_.push_back(inv->determinant);

    for (std::size_t l = 0; l < m; ++l) {
      // h = column l of the inverse: the combination that is 1 at level[l].
      std::vector<C> h(m);
      for (std::size_t a = 0; a < m; ++a) h[a] = inv->inverse[a][l];
      const C lead = h[l];
      if (lead.is_zero()) throw SingularSystem("interpolant has zero coefficient at its own label");
      const C scale = C(1) / lead;
      Poly p(n_);
      std::vector<C> g(lower.size(), C(0));
      for (std::size_t a = 0; a < m; ++a) {
        if (h[a].is_zero()) continue;
        const C ha = h[a] * scale;
        p += basis[a].scaled(ha);
        for (std::size_t v = 0; v < lower.size(); ++v)
          if (!newton[a][v].is_zero()) g[v] += ha * newton[a][v];
      }
      for (std::size_t v = 0; v < lower.size(); ++v)
        if (!g[v].is_zero()) p -= entries_.at(lower[v]).poly.scaled(g[v]);
      entries_.emplace(level[l], Entry{std::move(p), scale});
    }
    labels_.push_back(level);
  }

  int n_;
  EnumKind kind_;
  PointFn point_;
  BasisFn basis_;
  std::vector<std::vector<Composition>> labels_;
  std::vector<C> dets_;
  std::map<Composition, Entry> entries_;
  std::map<Composition, SpectralPoint<C>> points_;
  std::map<std::pair<Composition, Composition>, C> cross_;
};

/// Monomial basis on compositions.
template <class C>
ZPolynomial<C> monomial_basis(const Composition& alpha) {
  return ZPolynomial<C>::term(alpha.exponent(), C(1));
}

/// Monomial symmetric basis on partitions.
template <class C>
ZPolynomial<C> symmetric_basis(const Composition& alpha) {
  return monomial_symmetric<C>(alpha.exponent());
}

inline NewtonInterpolator<QTField> quantum_interpolator(int n, bool symmetric) {
  if (symmetric)
    return {n, EnumKind::partitions, [](const Composition& mu) { return point_bar(mu); }, symmetric_basis<QTField>};
  return {n, EnumKind::compositions, [](const Composition& mu) { return point_bar(mu); }, monomial_basis<QTField>};
}

inline NewtonInterpolator<RField> classical_interpolator(int n, bool symmetric) {
  if (symmetric)
    return {n, EnumKind::partitions, [](const Composition& mu) { return point_tilde(mu); }, symmetric_basis<RField>};
  return {n, EnumKind::compositions, [](const Composition& mu) { return point_tilde(mu); }, monomial_basis<RField>};
}

/// Plain evaluation matrix [mu-bar^alpha] on all labels of size <= d, at a
/// rational specialization of the parameters.
inline Matrix<BigRational> specialized_evaluation_matrix(int n, int d, bool symmetric, const BigRational& q0,
                                                         const BigRational& t0) {
  const auto labels = enumerate(d, n, symmetric ? EnumKind::partitions : EnumKind::compositions);
  const std::array<BigRational, 2> at{q0, t0};
  Matrix<BigRational> a;
  for (const auto& mu : labels) {
    SpectralPoint<BigRational> p;
    for (const auto& c : point_bar(mu)) p.push_back(c.specialize(std::span<const BigRational>(at)));
    std::vector<BigRational> row;
    for (const auto& alpha : labels) {
      const auto b = symmetric ? symmetric_basis<BigRational>(alpha) : monomial_basis<BigRational>(alpha);
      row.push_back(evaluate(b, p));
    }
    a.push_back(std::move(row));
  }
  return a;
}

}  // namespace capelli
