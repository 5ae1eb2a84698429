#pragma once

// Compositions and their orbit data: sorted partition, minimal permutation,
// k-vector, spectral points, diagram statistics and the order relations.

#include "capelli/field.hpp"
#include "capelli/zpoly.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : parts_(parts) { check(); }
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { check(); }
  static Composition zero(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int n() const { return static_cast<int>(parts_.size()); }
  /// 1-based part.
  int operator()(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// Index of the last nonzero part, 0 for the zero composition.
  int length() const {
    for (int i = n(); i >= 1; --i)
      if ((*this)(i) != 0) return i;
    return 0;
  }
  bool is_partition() const { return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()); }

  ExponentVector exponent() const { return ExponentVector(std::span<const int>(parts_)); }
  static Composition from_exponent(const ExponentVector& e) {
    return Composition(e.to_vector());
  }

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

 private:
  void check() const {
    if (parts_.size() > static_cast<std::size_t>(kMaxVariables))
      throw std::invalid_argument("composition has too many parts");
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
  }
  std::vector<int> parts_;
};

/// One-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<int> s = w_;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation");
  }
  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }
  /// The adjacent transposition s_i.
  static Permutation simple(int n, int i) {
    Permutation p = identity(n);
    std::swap(p.w_.at(static_cast<std::size_t>(i - 1)), p.w_.at(static_cast<std::size_t>(i)));
    return p;
  }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const { return w_; }

  int length() const {
    int inv = 0;
    for (std::size_t a = 0; a < w_.size(); ++a)
      for (std::size_t b = a + 1; b < w_.size(); ++b)
        if (w_[a] > w_[b]) ++inv;
    return inv;
  }

  Permutation inverse() const {
    std::vector<int> v(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) v[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
  }

  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const {
    std::vector<int> v(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) v[i] = w_.at(static_cast<std::size_t>(o.w_[i] - 1));
    return Permutation(std::move(v));
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + ")";
  }

 private:
  std::vector<int> w_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Lexicographically smallest reduced word (i_1,...,i_k) with w = s_{i_1}...s_{i_k}.
inline std::vector<int> min_reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  // s_i is a left descent of u iff u^{-1}(i) > u^{-1}(i+1); peel the smallest one.
  while (cur.length() > 0) {
    const Permutation inv = cur.inverse();
    int i = 1;
    while (inv(i) < inv(i + 1)) ++i;
    word.push_back(i);
    cur = Permutation::simple(w.n(), i) * cur;
  }
  return word;
}

inline Composition lambda_plus(const Composition& lambda) {
  std::vector<int> p = lambda.parts();
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(std::move(p));
}

/// Shortest w with lambda_i = lambda^+_{w(i)}; stable sort keeps equal parts in order.
inline Permutation w_lambda(const Composition& lambda) {
  const int n = lambda.n();
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return lambda[static_cast<std::size_t>(a)] > lambda[static_cast<std::size_t>(b)]; });
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) w[static_cast<std::size_t>(idx[static_cast<std::size_t>(pos)])] = pos + 1;
  return Permutation(std::move(w));
}

inline std::vector<int> k_vector(const Composition& lambda) {
  const int n = lambda.n();
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int j = 1; j < i; ++j) c += lambda(j) >= lambda(i);
    for (int j = i + 1; j <= n; ++j) c += lambda(j) > lambda(i);
    k[static_cast<std::size_t>(i - 1)] = c;
  }
  return k;
}

/// lambda-bar_i = q^{lambda_i} t^{-k_i}.
inline SpectralPoint<QTField> point_bar(const Composition& lambda) {
  const auto k = k_vector(lambda);
  SpectralPoint<QTField> p;
  for (int i = 1; i <= lambda.n(); ++i) p.push_back(qt_monomial(lambda(i), -k[static_cast<std::size_t>(i - 1)]));
  return p;
}

/// lambda-tilde_i = lambda_i - r k_i.
inline SpectralPoint<RField> point_tilde(const Composition& lambda) {
  const auto k = k_vector(lambda);
  SpectralPoint<RField> p;
  for (int i = 1; i <= lambda.n(); ++i)
    p.push_back(RField(lambda(i)) - RField(k[static_cast<std::size_t>(i - 1)]) * r_param());
  return p;
}

/// (lambda_n - 1, lambda_1, ..., lambda_{n-1}); needs lambda_n != 0.
inline Composition star_rotate(const Composition& lambda) {
  const int n = lambda.n();
  if (n == 0 || lambda(n) == 0) throw std::invalid_argument("star_rotate: last part must be nonzero");
  std::vector<int> p{lambda(n) - 1};
  for (int i = 1; i < n; ++i) p.push_back(lambda(i));
  return Composition(std::move(p));
}

/// (lambda_m - 1, lambda_1, ..., lambda_{m-1}, 0, ..., 0) with m = l(lambda).
inline Composition star_truncated(const Composition& lambda) {
  const int m = lambda.length();
  if (m == 0) throw std::invalid_argument("star_truncated: zero composition");
  std::vector<int> p(static_cast<std::size_t>(lambda.n()), 0);
  p[0] = lambda(m) - 1;
  for (int i = 1; i < m; ++i) p[static_cast<std::size_t>(i)] = lambda(i);
  return Composition(std::move(p));
}

/// r_w(i,j) = #{a <= i : w(a) >= j} comparison.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("bruhat_leq: permutations of different size");
  const int n = u.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int ru = 0, rv = 0;
      for (int a = 1; a <= i; ++a) {
        ru += u(a) >= j;
        rv += v(a) >= j;
      }
      if (ru > rv) return false;
    }
  return true;
}

/// Dominance of partitions of equal size (partial sums of mu bounded by lambda).
inline bool dominance_leq(const Composition& mu, const Composition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("dominance_leq: sizes differ");
  if (mu.n() != lambda.n()) throw std::invalid_argument("dominance_leq: lengths differ");
  int sm = 0, sl = 0;
  for (int i = 1; i <= mu.n(); ++i) {
    sm += mu(i);
    sl += lambda(i);
    if (sm > sl) return false;
  }
  return true;
}

/// mu <= lambda: mu^+ strictly dominated by lambda^+, or equal orbits and w_lambda <= w_mu.
inline bool order_leq(const Composition& mu, const Composition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("order_leq: compositions of different size");
  const Composition mp = lambda_plus(mu), lp = lambda_plus(lambda);
  if (mp != lp) return dominance_leq(mp, lp);
  return bruhat_leq(w_lambda(lambda), w_lambda(mu));
}

/// Cyclic shift of the parts at I (sorted, 1-based) with the last one incremented.
inline Composition c_move(const Composition& lambda, const std::vector<int>& index_set) {
  if (index_set.empty()) throw std::invalid_argument("c_move: empty index set");
  if (!std::is_sorted(index_set.begin(), index_set.end()) ||
      std::adjacent_find(index_set.begin(), index_set.end()) != index_set.end())
    throw std::invalid_argument("c_move: index set must be strictly increasing");
  if (index_set.front() < 1 || index_set.back() > lambda.n()) throw std::out_of_range("c_move: index out of range");
  std::vector<int> p = lambda.parts();
  const std::size_t r = index_set.size();
  for (std::size_t j = 0; j + 1 < r; ++j)
    p[static_cast<std::size_t>(index_set[j] - 1)] = lambda(index_set[j + 1]);
  p[static_cast<std::size_t>(index_set[r - 1] - 1)] = lambda(index_set[0]) + 1;
  return Composition(std::move(p));
}

inline bool preceq_witness(const Composition& lambda, const Composition& mu, const Permutation& pi) {
  for (int i = 1; i <= lambda.n(); ++i) {
    const int target = mu(pi(i));
    if (i < pi(i) ? !(lambda(i) < target) : !(lambda(i) <= target)) return false;
  }
  return true;
}

/// The candidate permutation with k_{pi(i)}(mu) = k_i(lambda).
inline Permutation preceq_candidate(const Composition& lambda, const Composition& mu) {
  const auto kl = k_vector(lambda), km = k_vector(mu);
  std::vector<int> pos(km.size());
  for (std::size_t j = 0; j < km.size(); ++j) pos[static_cast<std::size_t>(km[j])] = static_cast<int>(j) + 1;
  std::vector<int> pi(kl.size());
  for (std::size_t i = 0; i < kl.size(); ++i) pi[i] = pos[static_cast<std::size_t>(kl[i])];
  return Permutation(std::move(pi));
}

inline bool preceq(const Composition& lambda, const Composition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("preceq: compositions of different length");
  return preceq_witness(lambda, mu, preceq_candidate(lambda, mu));
}

inline bool preceq_brute(const Composition& lambda, const Composition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("preceq: compositions of different length");
  for (const auto& pi : all_permutations(lambda.n()))
    if (preceq_witness(lambda, mu, pi)) return true;
  return false;
}

struct Box {
  int i = 1;
  int j = 1;
};

struct ArmLeg {
  int arm = 0;
  int leg_before = 0;
  int leg_after = 0;
  int leg = 0;
};

inline ArmLeg arm_leg(const Composition& lambda, Box s) {
  if (s.i < 1 || s.i > lambda.n() || s.j < 1 || s.j > lambda(s.i))
    throw std::out_of_range("arm_leg: box outside the diagram");
  ArmLeg r;
  const int li = lambda(s.i);
  r.arm = li - s.j;
  for (int k = 1; k < s.i; ++k) r.leg_before += s.j <= lambda(k) + 1 && lambda(k) + 1 <= li;
  for (int k = s.i + 1; k <= lambda.n(); ++k) r.leg_after += s.j <= lambda(k) && lambda(k) <= li;
  r.leg = r.leg_before + r.leg_after;
  return r;
}

inline std::vector<Box> diagram(const Composition& lambda) {
  std::vector<Box> boxes;
  for (int i = 1; i <= lambda.n(); ++i)
    for (int j = 1; j <= lambda(i); ++j) boxes.push_back({i, j});
  return boxes;
}

enum class NormKind { nonsym, sym };

/// prod (1 - q^{a+1} t^{l+1}) or, for partitions, prod (1 - q^a t^{l+1}).
inline QTField norm_factor(const Composition& lambda, NormKind kind) {
  if (kind == NormKind::sym && !lambda.is_partition())
    throw std::invalid_argument("norm_factor: symmetric normalization needs a partition");
  QTField f(1);
  const int shift = kind == NormKind::nonsym ? 1 : 0;
  for (const Box& s : diagram(lambda)) {
    const ArmLeg al = arm_leg(lambda, s);
    f *= QTField(1) - qt_monomial(al.arm + shift, al.leg + 1);
  }
  return f;
}

inline RField norm_factor_classical(const Composition& lambda, NormKind kind) {
  if (kind == NormKind::sym && !lambda.is_partition())
    throw std::invalid_argument("norm_factor_classical: symmetric normalization needs a partition");
  RField f(1);
  const int shift = kind == NormKind::nonsym ? 1 : 0;
  for (const Box& s : diagram(lambda)) {
    const ArmLeg al = arm_leg(lambda, s);
    f *= RField(al.arm + shift) + RField(al.leg + 1) * r_param();
  }
  return f;
}

enum class EnumKind { compositions, partitions };

/// Compositions (or partitions) of exactly `size` with n parts, lex descending.
inline std::vector<Composition> enumerate_size(int size, int n, EnumKind kind) {
  std::vector<Composition> out;
  if (n == 0) {
    if (size == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left, int cap) -> void {
    if (pos == n - 1) {
      if (left <= cap) {
        cur[static_cast<std::size_t>(pos)] = left;
        out.emplace_back(cur);
      }
      return;
    }
    for (int v = std::min(left, cap); v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v, kind == EnumKind::partitions ? v : left - v);
    }
  };
  rec(rec, 0, size, size);
  return out;
}

/// Graded: all of size 0, then size 1, ..., up to d.
inline std::vector<Composition> enumerate(int d, int n, EnumKind kind) {
  std::vector<Composition> out;
  for (int s = 0; s <= d; ++s) {
    auto level = enumerate_size(s, n, kind);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace capelli
