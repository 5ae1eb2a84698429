#pragma once

// Command-line front end: compute, verify, expand, cache.
// run_cli is the whole program minus main(), so tests can drive it.

#include "capelli/construct.hpp"
#include "capelli/serialize.hpp"
#include "capelli/suite.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace capelli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitInternal = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of polynomial constructions performed by compute/cache put.
inline std::atomic<std::uint64_t>& construction_counter() {
  static std::atomic<std::uint64_t> n{0};
  return n;
}

using AnyPolynomial = std::variant<QTPoly, RPoly>;

inline std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw UsageError("bad part: " + item);
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("lambda must be comma-separated integers: " + text);
    }
  }
  if (parts.empty()) throw UsageError("lambda is empty");
  return parts;
}

inline Composition parse_lambda(const std::string& text, int n) {
  const auto parts = parse_parts(text);
  if (static_cast<int>(parts.size()) != n)
    throw UsageError("lambda has " + std::to_string(parts.size()) + " parts but n = " + std::to_string(n));
  for (int p : parts)
    if (p < 0) throw UsageError("lambda has a negative part");
  return Composition(parts);
}

inline Family parse_family(const std::string& s) {
  try {
    return family_from_string(s);
  } catch (const ParseError&) {
    throw UsageError("unknown family: " + s);
  }
}

inline Route default_route(Family f) {
  switch (f) {
    case Family::E:
    case Family::EE_norm:
    case Family::E_bar: return Route::recursion;
    case Family::P:
    case Family::P_norm:
    case Family::P_bar: return Route::symmetrization;
    default: return Route::interpolation;
  }
}

inline void check_route(Family f, Route r) {
  const bool ok = [&] {
    switch (f) {
      case Family::E:
      case Family::EE_norm:
      case Family::E_bar: return r == Route::recursion || r == Route::interpolation;
      case Family::P:
      case Family::P_norm:
      case Family::P_bar: return r == Route::symmetrization || r == Route::interpolation;
      default: return r == Route::interpolation;
    }
  }();
  if (!ok) throw UsageError("route " + to_string(r) + " is not available for family " + to_string(f));
}

inline AnyPolynomial construct_family(Builder& b, Family f, const Composition& lambda, Route route) {
  ++construction_counter();
  const bool interp = route == Route::interpolation;
  auto e = [&] { return interp ? b.interpolate_nonsym(lambda).body : b.recurse_nonsym(lambda).body; };
  auto p = [&] { return interp ? b.interpolate_sym(lambda).body : b.symmetrize_hecke(lambda).body; };
  switch (f) {
    case Family::E: return e();
    case Family::EE_norm: return e().scaled(norm_factor(lambda, NormKind::nonsym));
    case Family::E_bar: return top_homogeneous(e());
    case Family::P: return p();
    case Family::P_norm: return p().scaled(norm_factor(lambda, NormKind::sym));
    case Family::P_bar: return top_homogeneous(p());
    case Family::E_tilde: return b.interpolate_classical(lambda, false).body;
    case Family::P_tilde: return b.interpolate_classical(lambda, true).body;
    case Family::EE_tilde_norm: return b.normalized_classical(lambda, false).body;
    case Family::P_tilde_norm: return b.normalized_classical(lambda, true).body;
  }
  throw std::logic_error("unhandled family");
}

inline std::string render(const CacheKey& key, const AnyPolynomial& poly, const std::string& format) {
  if (format == "latex") return std::visit([](const auto& f) { return to_latex(f); }, poly);
  if (const auto* qt = std::get_if<QTPoly>(&poly)) return document_to_json(PolynomialDocument<QT>{key, {}, *qt}).dump(2);
  return document_to_json(PolynomialDocument<R>{key, {}, std::get<RPoly>(poly)}).dump(2);
}

inline AnyPolynomial parse_document(const std::string& bytes) {
  const Json j = Json::parse(bytes);
  if (j.at("field").get<std::string>() == "r") return document_from_json<R>(j).body;
  return document_from_json<QT>(j).body;
}

struct FamilyRequest {
  std::string family = "E";
  int n = 0;
  std::string lambda;
  std::string route;

  CacheKey key() const {
    CacheKey k;
    k.family = parse_family(family);
    if (n < 1 || n > kMaxVariables) throw UsageError("n must be between 1 and " + std::to_string(kMaxVariables));
    const Composition l = parse_lambda(lambda, n);
    if (is_symmetric_family(k.family) && !l.is_partition())
      throw UsageError("family " + family + " needs a partition, got " + l.to_string());
    k.n = n;
    k.lambda = l.parts();
    k.field = is_classical_family(k.family) ? "r" : "qt";
    try {
      k.route = route.empty() ? default_route(k.family) : route_from_string(route);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    check_route(k.family, k.route);
    return k;
  }
};

/// Looks the key up in the cache, computing and storing it on a miss.
inline AnyPolynomial fetch(const CacheKey& key, Cache& cache) {
  if (auto bytes = cache.get(key)) {
    try {
      return parse_document(*bytes);
    } catch (const std::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  Builder b(key.n);
  AnyPolynomial p = construct_family(b, key.family, Composition(key.lambda), key.route);
  cache.put(key, render(key, p, "json"));
  return p;
}

template <class C>
std::map<Composition, C> m_expansion(const ZPolynomial<C>& f) {
  if (!is_symmetric(f)) throw UsageError("m-basis expansion needs a symmetric polynomial");
  std::map<Composition, C> out;
  for (const auto& [e, c] : monomial_symmetric_expand(f)) out.emplace(Composition::from_exponent(e), c);
  return out;
}

inline int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Capelli polynomials: exact construction and verification"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "cache directory (overrides CAPELLI_CACHE_DIR)");

  FamilyRequest req;
  std::string format = "latex";
  auto add_family_opts = [&](CLI::App* sub, bool required) {
    sub->add_option("--family", req.family, "E, P, EE, PP, Ebar, Pbar, Etilde, Ptilde, EEtilde, PPtilde");
    auto* n = sub->add_option("--n", req.n, "number of variables");
    auto* l = sub->add_option("--lambda", req.lambda, "comma-separated parts, exactly n of them");
    if (required) {
      n->required();
      l->required();
    }
    sub->add_option("--route", req.route, "recursion, interpolation or symmetrization");
  };

  auto* compute = app.add_subcommand("compute", "build one polynomial");
  add_family_opts(compute, true);
  compute->add_option("--format", format, "json or latex")->check(CLI::IsMember({"json", "latex"}));
  compute->add_option("--cache-dir", cache_dir, "cache directory");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteConfig cfg;
  std::string r_values = "1,2,3";
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--n-max", cfg.n_max);
  verify->add_option("--degree-max", cfg.degree_max);
  verify->add_option("--extra-degree", cfg.extra_degree);
  verify->add_option("--r", r_values, "comma-separated r values for the classical suites");
  verify->add_option("--seed", cfg.random_seed);
  verify->add_option("--samples", cfg.specialization_samples);

  auto* expand = app.add_subcommand("expand", "expand in the E basis or the monomial symmetric basis");
  std::string times, poly_text, doc_path, basis = "E";
  add_family_opts(expand, false);
  expand->add_option("--times", times, "second lambda: expand E_lambda * E_times");
  expand->add_option("--poly", poly_text, "inline polynomial in z_1..z_n over q, t");
  expand->add_option("--document", doc_path, "polynomial document (JSON)");
  expand->add_option("--basis", basis, "E or m")->check(CLI::IsMember({"E", "m"}));
  expand->add_option("--format", format, "json or latex")->check(CLI::IsMember({"json", "latex"}));

  auto* cache_cmd = app.add_subcommand("cache", "inspect or fill the result cache");
  std::string action;
  cache_cmd->add_option("action", action, "get, put, purge or stat")
      ->required()
      ->check(CLI::IsMember({"get", "put", "purge", "stat"}));
  add_family_opts(cache_cmd, false);
  cache_cmd->add_option("--cache-dir", cache_dir, "cache directory");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*compute) {
      const CacheKey key = req.key();
      Cache cache(Cache::resolve_dir(cache_dir), err);
      const AnyPolynomial p = fetch(key, cache);
      out << render(key, p, format) << "\n";
      return kExitOk;
    }
    if (*verify) {
      if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite: " + suite);
      cfg.classical_r_values = parse_parts(r_values);
      for (int r : cfg.classical_r_values)
        if (r <= 0) throw UsageError("r values must be positive");
      if (cfg.n_max < 0 || cfg.degree_max < 0 || cfg.extra_degree < 0 || cfg.specialization_samples < 0)
        throw UsageError("suite bounds must be non-negative");
      if (cfg.n_max > kMaxVariables) throw UsageError("n-max too large");
      const SuiteReport report = run_suite(suite, cfg);
      out << report_to_json(report, cfg).dump(2) << "\n";
      return report.passed() ? kExitOk : kExitFailure;
    }
    if (*expand) {
      int n = req.n;
      QTPoly f;
      if (!poly_text.empty()) {
        if (n < 1 || n > kMaxVariables) throw UsageError("--poly needs --n");
        try {
          f = parse_polynomial<QT>(poly_text, n);
        } catch (const ParseError& e) {
          throw UsageError(e.what());
        }
      } else if (!doc_path.empty()) {
        std::ifstream in(doc_path);
        if (!in) throw UsageError("cannot read " + doc_path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
          auto doc = document_from_json<QT>(Json::parse(ss.str()));
          f = doc.body;
          n = doc.key.n;
        } catch (const std::exception& e) {
          throw UsageError(std::string("bad document: ") + e.what());
        }
      } else {
        if (req.lambda.empty()) throw UsageError("expand needs --lambda, --poly or --document");
        const CacheKey key = req.key();
        if (key.field != "qt") throw UsageError("expand works over (q,t)");
        Cache cache(Cache::resolve_dir(cache_dir), err);
        f = std::get<QTPoly>(fetch(key, cache));
        if (!times.empty()) {
          FamilyRequest other = req;
          other.lambda = times;
          f = f * std::get<QTPoly>(fetch(other.key(), cache));
        }
      }
      Builder b(n);
      const auto coeffs = basis == "m" ? m_expansion(f) : b.expand_in_E_basis(f);
      if (format == "latex") {
        std::string s;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
          ZPolynomial<QTField> c = ZPolynomial<QTField>::constant(1, it->second);
          s += (s.empty() ? "" : " + ") + std::string("\\left(") + to_latex(c) + "\\right) " + basis + "_{" +
               it->first.to_string() + "}";
        }
        out << (s.empty() ? "0" : s) << "\n";
      } else {
        out << expansion_to_json<QT>(basis, n, coeffs).dump(2) << "\n";
      }
      return kExitOk;
    }
    if (*cache_cmd) {
      Cache cache(Cache::resolve_dir(cache_dir), err);
      Json j;
      j["schema"] = kSchema;
      j["enabled"] = cache.enabled();
      if (!cache.enabled()) err << "warning: no usable cache directory; nothing to do\n";
      if (action == "stat") {
        Json arr = Json::array();
        for (const auto& e : cache.entries()) arr.push_back({{"key", e.key}, {"bytes", e.bytes}});
        j["entries"] = arr;
      } else if (action == "purge") {
        j["removed"] = cache.purge();
      } else {
        const CacheKey key = req.key();
        j["key"] = key.to_string();
        if (action == "get") {
          const auto bytes = cache.get(key);
          j["status"] = bytes ? "hit" : "miss";
          if (bytes) j["document"] = Json::parse(*bytes);
        } else {
          Builder b(key.n);
          const AnyPolynomial p = construct_family(b, key.family, Composition(key.lambda), key.route);
          j["status"] = cache.put(key, render(key, p, "json")) ? "stored" : "bypassed";
        }
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace capelli
