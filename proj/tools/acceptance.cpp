// Acceptance battery: one PASS/FAIL line per criterion, exact comparisons only.

#include "capelli/suite.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace capelli;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void absorb(Outcome& o, const SuiteReport& r) {
  if (!r.passed()) {
    o.ok = false;
    o.note += r.name + ": " + std::to_string(r.failures.size()) + " failures, first " + r.failures.front().where + "; ";
  }
}

SuiteReport suite(SuiteContext& ctx, const std::string& name, int n_max, int degree_max, int extra = 2) {
  SuiteConfig cfg;
  cfg.n_max = n_max;
  cfg.degree_max = degree_max;
  cfg.extra_degree = extra;
  return run_suite(name, cfg, ctx);
}

bool nonsingular(std::vector<std::vector<BigRational>> a) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const BigRational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return true;
}

// Nonzero determinant at one rational point certifies a nonzero determinant over Q(q,t).
bool certified(int n, int d, EnumKind kind) {
  const auto labels = enumerate(d, n, kind);
  const std::vector<std::pair<BigRational, BigRational>> samples{
      {BigRational(2, 3), BigRational(5, 7)}, {BigRational(3), BigRational(-4, 5)}, {BigRational(-7, 2), BigRational(11, 3)}};
  for (const auto& [q0, t0] : samples) {
    std::vector<std::vector<BigRational>> m;
    for (const auto& mu : labels) {
      const auto p = detail::specialize_point(point_bar(mu), q0, t0);
      std::vector<BigRational> row;
      for (const auto& alpha : labels) {
        const auto basis = kind == EnumKind::partitions ? monomial_symmetric<BigRational>(alpha.exponent())
                                                        : ZPolynomial<BigRational>::term(alpha.exponent(), BigRational(1));
        row.push_back(evaluate(basis, p));
      }
      m.push_back(std::move(row));
    }
    if (nonsingular(std::move(m))) return true;
  }
  return false;
}

Outcome unisolvence(SuiteContext& ctx) {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d) {
      Builder& b = ctx.builder(n);
      if (b.nonsym_interp().level_determinant(d).is_zero() || b.sym_interp().level_determinant(d).is_zero() ||
          !certified(n, d, EnumKind::compositions) || !certified(n, d, EnumKind::partitions)) {
        o.ok = false;
        o.note += "n=" + std::to_string(n) + " d=" + std::to_string(d) + " singular; ";
      }
    }
  return o;
}

Outcome oracle_equivalence(SuiteContext& ctx) {
  Outcome o;
  for (const auto& [n_max, d] : {std::pair{3, 4}, std::pair{4, 3}})
    for (int n = 1; n <= n_max; ++n) {
      Builder& b = ctx.builder(n);
      for (const auto& lambda : enumerate(d, n, EnumKind::compositions))
        if (!(b.recurse_nonsym(lambda).body == b.interpolate_nonsym(lambda).body)) {
          o.ok = false;
          o.note += "n=" + std::to_string(n) + " " + lambda.to_string() + "; ";
        }
    }
  return o;
}

Outcome vanishing(SuiteContext& ctx) {
  Outcome o;
  absorb(o, suite(ctx, "vanishing", 3, 4));
  absorb(o, suite(ctx, "vanishing", 4, 3));
  absorb(o, suite(ctx, "extra_vanishing", 3, 4));
  absorb(o, suite(ctx, "extra_vanishing", 4, 3));
  return o;
}

Outcome inversion(SuiteContext& ctx) {
  Outcome o;
  absorb(o, suite(ctx, "inversion", 2, 3));
  // literal exponent: top(E)(Z_1, ..., Z_n)(1) = q^{C(d,2)} E
  int mismatches = 0;
  std::string witness;
  for (int n = 1; n <= 2; ++n) {
    Builder& b = ctx.builder(n);
    for (const auto& lambda : enumerate(3, n, EnumKind::compositions)) {
      const int d = lambda.size();
      const QTPoly e = b.recurse_nonsym(lambda).body;
      const QTPoly raised = b.raise(top_homogeneous(e));
      if (raised == e.scaled(qt_monomial(d * (d - 1) / 2, 0))) continue;
      ++mismatches;
      if (witness.empty() || (n == 2 && lambda == Composition{2, 0}))
        witness = "n=" + std::to_string(n) + " " + lambda.to_string() + ": expected q^" + std::to_string(d * (d - 1) / 2) +
                  ", observed " + raised.coefficient(lambda.exponent()).to_string();
    }
  }
  if (mismatches) {
    o.ok = false;
    o.note += "exponent check q^{C(d,2)} fails for " + std::to_string(mismatches) + " labels (" + witness + ")";
  }
  return o;
}

Outcome order_lemmas() {
  Outcome o;
  SuiteReport r;
  r.name = "order lemmas";
  detail::Recorder rec(r);
  for (int n = 1; n <= 4; ++n) detail::check_order_lemmas(n, 3, rec);
  absorb(o, r);
  return o;
}

}  // namespace

int main() {
  SuiteContext ctx;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"unisolvence", [&] { return unisolvence(ctx); }},
      {"oracle equivalence", [&] { return oracle_equivalence(ctx); }},
      {"defining and extra vanishing", [&] { return vanishing(ctx); }},
      {"eigen equations",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "eigen", 3, 3));
         absorb(o, suite(ctx, "classical_eigen", 3, 3));
         return o;
       }},
      {"Hecke relations",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "hecke_relations", 3, 3));
         return o;
       }},
      {"commutativity",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "commutativity", 3, 3));
         return o;
       }},
      {"triangularity",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "triangularity", 3, 4));
         absorb(o, suite(ctx, "triangularity", 4, 3));
         return o;
       }},
      {"special cases t=1 and t=q",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "special_t1", 3, 4));
         absorb(o, suite(ctx, "special_tq", 3, 4));
         return o;
       }},
      {"inversion", [&] { return inversion(ctx); }},
      {"integrality",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "integrality", 3, 4));
         absorb(o, suite(ctx, "integrality", 4, 3));
         absorb(o, suite(ctx, "classical_integrality", 3, 4));
         absorb(o, suite(ctx, "classical_integrality", 4, 3));
         return o;
       }},
      {"classical limit",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "limit", 2, 3));
         return o;
       }},
      {"product support",
       [&] {
         Outcome o;
         absorb(o, suite(ctx, "product_support", 2, 2));
         SuiteContext fresh;
         SuiteConfig cfg;
         cfg.n_max = 3;
         cfg.degree_max = 1;
         absorb(o, run_suite("product_support", cfg, fresh));
         return o;
       }},
      {"order lemmas", [] { return order_lemmas(); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    char head[96];
    std::snprintf(head, sizeof head, "%s %2zu %-30s %7.1fs", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].name, secs);
    std::cout << head << (o.note.empty() ? "" : "  " + o.note) << std::endl;
  }
  return failed ? 1 : 0;
}
