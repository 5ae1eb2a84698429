#pragma once

// JSON documents, LaTeX rendering and inline polynomial input, and the
// on-disk result cache.

#include "capelli/construct.hpp"
#include "capelli/field.hpp"
#include "capelli/suite.hpp"
#include "capelli/weights.hpp"
#include "capelli/zpoly.hpp"

#include <json.hpp>

#include <atomic>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace capelli {

inline constexpr std::string_view kSchema = "capelli/1";
inline constexpr std::string_view kLibraryVersion = "0.1.0";

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

// ---- coefficients

template <ParameterSet P>
Json param_poly_to_json(const ParamPolynomial<P>& p) {
  Json out = Json::array();
  for (const auto& term : p.terms())
    out.push_back({{"exponents", std::vector<int>(term.exp.begin(), term.exp.end())}, {"coefficient", term.coef.str()}});
  return out;
}

template <ParameterSet P>
ParamPolynomial<P> param_poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("parameter polynomial must be an array of terms");
  std::vector<typename ParamPolynomial<P>::Term> terms;
  for (const auto& t : j) {
    const auto ex = t.at("exponents").get<std::vector<int>>();
    if (ex.size() != P::kSize) throw ParseError("parameter exponent of wrong length");
    typename ParamPolynomial<P>::Term term;
    std::copy(ex.begin(), ex.end(), term.exp.begin());
    term.coef = parse_rational(t.at("coefficient").get<std::string>());
    terms.push_back(std::move(term));
  }
  return ParamPolynomial<P>::from_terms(std::move(terms));
}

template <ParameterSet P>
Json coefficient_to_json(const RationalFunction<P>& c) {
  return {{"num_terms", param_poly_to_json(c.num())}, {"den_terms", param_poly_to_json(c.den())}};
}

template <ParameterSet P>
RationalFunction<P> coefficient_from_json(const Json& j) {
  const auto num = param_poly_from_json<P>(j.at("num_terms"));
  const auto den = param_poly_from_json<P>(j.at("den_terms"));
  if (den.is_zero()) throw ParseError("zero denominator");
  return RationalFunction<P>::fraction(num, den);
}

template <ParameterSet P>
Json polynomial_terms_to_json(const ZPolynomial<RationalFunction<P>>& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({{"exponents", e.to_vector()}, {"coefficient", coefficient_to_json(c)}});
  return out;
}

template <ParameterSet P>
ZPolynomial<RationalFunction<P>> polynomial_terms_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("terms must be an array");
  ZPolynomial<RationalFunction<P>> f(n);
  for (const auto& t : j) {
    const auto ex = t.at("exponents").get<std::vector<int>>();
    if (static_cast<int>(ex.size()) != n) throw ParseError("monomial exponent of wrong length");
    f.add_term(ExponentVector(std::span<const int>(ex)), coefficient_from_json<P>(t.at("coefficient")));
  }
  return f;
}

// ---- documents

struct CacheKey {
  std::string schema{kSchema};
  Family family = Family::E;
  int n = 0;
  std::vector<int> lambda;
  std::string field = "qt";
  Route route = Route::recursion;

  bool operator==(const CacheKey&) const = default;

  /// Filesystem-safe rendering: letters, digits, '_' and '-'.
  std::string to_string() const {
    std::string s = "capelli1_" + capelli::to_string(family) + "_n" + std::to_string(n) + "_";
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "-" : "") + std::to_string(lambda[i]);
    s += "_" + field + "_" + capelli::to_string(route);
    for (char& ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '-';
    return s;
  }
};

template <ParameterSet P>
struct PolynomialDocument {
  CacheKey key;
  std::string created_by = "capelli " + std::string(kLibraryVersion);
  ZPolynomial<RationalFunction<P>> body;
};

template <ParameterSet P>
Json document_to_json(const PolynomialDocument<P>& doc) {
  Json j;
  j["schema"] = doc.key.schema;
  j["family"] = to_string(doc.key.family);
  j["n"] = doc.key.n;
  j["lambda"] = doc.key.lambda;
  j["field"] = doc.key.field;
  j["route"] = to_string(doc.key.route);
  j["created_by"] = doc.created_by;
  j["library_version"] = kLibraryVersion;
  j["terms"] = polynomial_terms_to_json(doc.body);
  return j;
}

inline Family family_from_string(std::string_view s) {
  for (Family f : {Family::E, Family::P, Family::EE_norm, Family::P_norm, Family::E_bar, Family::P_bar, Family::E_tilde,
                   Family::P_tilde, Family::EE_tilde_norm, Family::P_tilde_norm})
    if (to_string(f) == s) return f;
  throw ParseError("unknown family: " + std::string(s));
}

inline Route route_from_string(std::string_view s) {
  for (Route r : {Route::recursion, Route::interpolation, Route::symmetrization, Route::limit})
    if (to_string(r) == s) return r;
  throw ParseError("unknown route: " + std::string(s));
}

template <ParameterSet P>
PolynomialDocument<P> document_from_json(const Json& j) {
  if (j.value("schema", std::string()) != kSchema) throw ParseError("unsupported schema");
  PolynomialDocument<P> doc;
  doc.key.family = family_from_string(j.at("family").get<std::string>());
  doc.key.n = j.at("n").get<int>();
  doc.key.lambda = j.at("lambda").get<std::vector<int>>();
  doc.key.field = j.at("field").get<std::string>();
  if (doc.key.field != P::kTag) throw ParseError("coefficient field mismatch");
  doc.key.route = route_from_string(j.at("route").get<std::string>());
  doc.created_by = j.value("created_by", std::string());
  doc.body = polynomial_terms_from_json<P>(j.at("terms"), doc.key.n);
  return doc;
}

inline Json report_to_json(const SuiteReport& r, const SuiteConfig& cfg) {
  Json j;
  j["schema"] = kSchema;
  j["suite"] = r.name;
  j["passed"] = r.passed();
  j["cases"] = r.cases;
  j["config"] = {{"n_max", cfg.n_max},
                 {"degree_max", cfg.degree_max},
                 {"extra_degree", cfg.extra_degree},
                 {"classical_r_values", cfg.classical_r_values},
                 {"random_seed", cfg.random_seed},
                 {"specialization_samples", cfg.specialization_samples}};
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back({{"where", f.where}, {"value", f.value}});
  j["failures"] = fails;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

template <ParameterSet P>
Json expansion_to_json(std::string_view basis, int n, const std::map<Composition, RationalFunction<P>>& coeffs) {
  Json j;
  j["schema"] = kSchema;
  j["basis"] = basis;
  j["n"] = n;
  j["field"] = P::kTag;
  Json arr = Json::array();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    arr.push_back({{"label", it->first.parts()}, {"coefficient", coefficient_to_json(it->second)}});
  j["coefficients"] = arr;
  return j;
}

// ---- LaTeX

namespace detail {

inline std::string latex_rational(const BigRational& x) {
  if (is_integer(x)) return x.str();
  const BigInt p = num_of(x), q = den_of(x);
  return (p < 0 ? "-\\frac{" + BigInt(-p).str() : "\\frac{" + p.str()) + "}{" + q.str() + "}";
}

template <ParameterSet P>
std::string latex_param_monomial(const typename ParamPolynomial<P>::Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < P::kSize; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += std::string(P::kNames[i]);
    if (e[i] != 1) s += "^{" + std::to_string(e[i]) + "}";
  }
  return s;
}

template <ParameterSet P>
std::string latex_param_poly(const ParamPolynomial<P>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& term : p.terms()) {
    BigRational c = term.coef;
    const bool negative = c < 0;
    if (negative) c = -c;
    s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const std::string mono = latex_param_monomial<P>(term.exp);
    if (mono.empty())
      s += latex_rational(c);
    else if (c == 1)
      s += mono;
    else
      s += latex_rational(c) + " " + mono;
  }
  return s;
}

/// Renders |c| as a factor, with the sign returned separately.
template <ParameterSet P>
std::pair<bool, std::string> latex_coefficient(const RationalFunction<P>& c) {
  auto num = c.num();
  bool negative = num.leading().coef < 0;
  if (negative) num = -num;
  if (c.den().is_one()) {
    if (num.is_one()) return {negative, ""};
    if (num.is_monomial()) return {negative, latex_param_poly(num)};
    return {negative, "\\left(" + latex_param_poly(num) + "\\right)"};
  }
  return {negative, "\\frac{" + latex_param_poly(num) + "}{" + latex_param_poly(c.den()) + "}"};
}

}  // namespace detail

template <ParameterSet P>
std::string to_latex(const ZPolynomial<RationalFunction<P>>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    auto [negative, coef] = detail::latex_coefficient(c);
    std::string mono;
    for (int i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "z_{" + std::to_string(i + 1) + "}";
      if (e[i] != 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
      s += coef.empty() ? "1" : coef;
    else
      s += coef.empty() ? mono : coef + " " + mono;
  }
  return s;
}

/// Recursive-descent reader for the inline polynomial grammar; LaTeX output
/// is a sentence of the same grammar.
///   expr   := ['+'|'-'] term { ('+'|'-') term }
///   term   := factor { ['*' | '\cdot'] factor }
///   factor := atom [ '^' ( '{' ['-'] digits '}' | ['-'] digits ) ]
///   atom   := number | param | z_i | z_{i} | '(' expr ')' | '\left(' expr '\right)'
///           | '{' expr '}' | '\frac{' expr '}{' expr '}'
/// Division is allowed only by expressions free of the z variables.
template <ParameterSet P>
class PolynomialReader {
 public:
  using Field = RationalFunction<P>;
  using Poly = ZPolynomial<Field>;

  PolynomialReader(std::string_view text, int n) : s_(text), n_(n) {}

  Poly parse() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  bool at_atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '{' || c == 'z') return true;
    if (peek("\\frac") || peek("\\left(")) return true;
    for (auto name : P::kNames)
      if (peek(name)) return true;
    return false;
  }
  BigInt digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }
  int small_int() {
    const bool neg = accept("-");
    const BigInt v = digits();
    if (v > 1000000) fail("exponent too large");
    return neg ? -v.convert_to<int>() : v.convert_to<int>();
  }

  Poly expr() {
    Poly r(n_);
    bool negative = false;
    if (accept("-"))
      negative = true;
    else
      accept("+");
    r = term();
    if (negative) r = -r;
    for (;;) {
      if (accept("+"))
        r += term();
      else if (accept("-"))
        r -= term();
      else
        return r;
    }
  }
  Poly term() {
    Poly r = factor();
    for (;;) {
      if (accept("*") || accept("\\cdot"))
        r = r * factor();
      else if (at_atom_start())
        r = r * factor();
      else
        return r;
    }
  }
  Poly factor() {
    Poly base = atom();
    if (!accept("^")) return base;
    int e;
    if (accept("{")) {
      e = small_int();
      expect("}");
    } else {
      e = small_int();
    }
    return power(base, e);
  }
  Poly power(const Poly& base, int e) {
    if (e < 0) {
      if (base.total_degree() > 0 || base.is_zero()) fail("negative power of a non-constant");
      return Poly::constant(n_, base.coefficient(ExponentVector(n_)).pow(e));
    }
    Poly r = Poly::constant(n_, Field(1));
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }
  Poly divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail("division by zero");
    if (den.total_degree() > 0 || den.terms().size() != 1) fail("division by a polynomial in z");
    return num.scaled(den.coefficient(ExponentVector(n_)).inverse());
  }
  Poly atom() {
    skip();
    if (accept("\\frac")) {
      expect("{");
      Poly num = expr();
      expect("}");
      expect("{");
      Poly den = expr();
      expect("}");
      return divide(num, den);
    }
    if (accept("\\left(")) {
      Poly r = expr();
      expect("\\right)");
      return r;
    }
    if (accept("(")) {
      Poly r = expr();
      expect(")");
      return r;
    }
    if (accept("{")) {
      Poly r = expr();
      expect("}");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      BigRational v(digits());
      if (accept("/")) v /= BigRational(digits());
      return Poly::constant(n_, Field(v));
    }
    if (accept("z")) {
      accept("_");
      int i;
      if (accept("{")) {
        i = small_int();
        expect("}");
      } else {
        i = small_int();
      }
      if (i < 1 || i > n_) fail("variable index out of range");
      return Poly::variable(n_, i);
    }
    for (std::size_t k = 0; k < P::kSize; ++k)
      if (accept(P::kNames[k])) return Poly::constant(n_, Field::param(k));
    fail("unexpected token");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

template <ParameterSet P>
ZPolynomial<RationalFunction<P>> parse_polynomial(std::string_view text, int n) {
  return PolynomialReader<P>(text, n).parse();
}

// ---- cache

struct CacheEntry {
  std::string key;
  std::uintmax_t bytes = 0;
};

/// One file per key under a directory. Writes go through a temporary file
/// and an atomic rename; an unusable directory turns the cache off with a
/// warning.
class Cache {
 public:
  explicit Cache(std::optional<std::filesystem::path> dir, std::ostream& warn = std::cerr) : warn_(warn) {
    if (!dir || dir->empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec || !probe(*dir)) {
      warn_ << "warning: cache directory " << dir->string() << " is not writable; caching disabled\n";
      return;
    }
    dir_ = std::move(dir);
  }

  /// --cache-dir wins over CAPELLI_CACHE_DIR.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("CAPELLI_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  std::optional<std::string> get(const CacheKey& key) {
    if (!dir_) return std::nullopt;
    std::ifstream in(path(key), std::ios::binary);
    if (!in) {
      ++misses_;
      return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ++hits_;
    return ss.str();
  }

  bool put(const CacheKey& key, const std::string& bytes) {
    if (!dir_) return false;
    std::random_device rd;
    const auto tmp = *dir_ / (".tmp-" + key.to_string() + "-" + std::to_string(rd()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return bypass("cannot create " + tmp.string());
      out << bytes;
      if (!out.flush()) return bypass("cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path(key), ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      return bypass("cannot rename into " + path(key).string());
    }
    ++writes_;
    return true;
  }

  std::size_t purge() {
    if (!dir_) return 0;
    std::size_t removed = 0;
    std::error_code ec;
    for (const auto& e : entries()) removed += std::filesystem::remove(*dir_ / (e.key + ".json"), ec) ? 1 : 0;
    return removed;
  }

  std::vector<CacheEntry> entries() const {
    std::vector<CacheEntry> out;
    if (!dir_) return out;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(*dir_, ec)) {
      const auto name = e.path().filename().string();
      if (!e.is_regular_file() || e.path().extension() != ".json" || name.rfind("capelli1_", 0) != 0) continue;
      out.push_back({e.path().stem().string(), e.file_size(ec)});
    }
    std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.key < b.key; });
    return out;
  }

  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  std::uint64_t writes() const { return writes_; }

 private:
  std::filesystem::path path(const CacheKey& key) const { return *dir_ / (key.to_string() + ".json"); }

  static bool probe(const std::filesystem::path& dir) {
    std::random_device rd;
    const auto p = dir / (".probe-" + std::to_string(rd()));
    {
      std::ofstream out(p);
      if (!out || !(out << "x") || !out.flush()) return false;
    }
    std::error_code ec;
    std::filesystem::remove(p, ec);
    return true;
  }

  bool bypass(const std::string& why) {
    warn_ << "warning: " << why << "; caching disabled\n";
    dir_.reset();
    return false;
  }

  std::ostream& warn_;
  std::optional<std::filesystem::path> dir_;
  std::uint64_t hits_ = 0, misses_ = 0, writes_ = 0;
};

}  // namespace capelli
