#pragma once

// Arbitrary-precision integers and rationals, backed by GMP through
// Boost.Multiprecision with expression templates disabled so that the
// types behave like ordinary value types inside generic code.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace capelli {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline BigInt num_of(const BigRational& x) { return boost::multiprecision::numerator(x); }
inline BigInt den_of(const BigRational& x) { return boost::multiprecision::denominator(x); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

template <class T>
T ipow(T base, unsigned k) {
  T r(1);
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

inline bool is_integer(const BigRational& x) { return den_of(x) == 1; }

/// Decimal rendering: "p" or "p/q".
inline std::string to_string(const BigRational& x) { return x.str(); }
inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses "p", "-p" or "p/q" with decimal digits only.
inline BigRational parse_rational(std::string_view s) {
  auto valid_int = [](std::string_view v) {
    if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string_view p = s.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!valid_int(p) || !valid_int(q) || q.front() == '-' || q.front() == '+')
    throw std::invalid_argument("malformed rational: " + std::string(s));
  BigInt pn(std::string(p.front() == '+' ? p.substr(1) : p));
  BigInt qn{std::string(q)};
  if (qn == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return BigRational(pn, qn);
}

}  // namespace capelli
