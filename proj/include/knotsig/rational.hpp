#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "knotsig/error.hpp"

namespace knotsig {

using Integer = boost::multiprecision::cpp_int;
/// Always normalized: positive denominator, numerator and denominator coprime.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

/// "p/q" in lowest terms; integers keep the "/1".
inline std::string to_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Accepts "p", "p/q", with an optional leading sign on p.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  auto p = text.substr(0, slash);
  auto q = text.substr(slash + 1);
  if (!is_int(p) || !is_int(q) || q.front() == '-' || q.front() == '+')
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  Integer qi = to_int(q);
  if (qi == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(to_int(p), qi);
}

inline Integer floor(const Rational& r) {
  Integer q = num(r) / den(r);  // truncates toward zero
  if (r.sign() < 0 && q * den(r) != num(r)) q -= 1;
  return q;
}

inline Integer abs(const Integer& v) { return v.sign() < 0 ? Integer(-v) : v; }

/// Square-free part of a positive integer. Trial division runs only up to the
/// cube root of the shrinking cofactor; what remains has at most two prime
/// factors, so it is either a perfect square or already square-free.
inline Integer squarefree_kernel(Integer n) {
  if (n.sign() <= 0) throw Error(ErrorCode::OutOfRange, "squarefree_kernel needs n > 0");
  Integer kernel = 1;
  for (Integer p = 2; p * p * p <= n; p += (p == 2 ? 1 : 2)) {
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    if (exponent % 2 == 1) kernel *= p;
  }
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root != n) kernel *= n;
  return kernel;
}

namespace detail {

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi == nullopt means +inf.
inline Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  Integer fl = floor(lo);
  Rational next(fl + 1);
  if (!hi || next < *hi) return next;
  // No integer strictly inside, so fl < lo < hi <= fl + 1 or lo == fl.
  Rational frac_lo = lo - Rational(fl);
  Rational frac_hi = *hi - Rational(fl);
  std::optional<Rational> inv_hi;
  if (frac_lo.sign() != 0) inv_hi = 1 / frac_lo;
  Rational inner = simplest_nonneg(1 / frac_hi, inv_hi);
  return Rational(fl) + 1 / inner;
}

}  // namespace detail

/// Rational with the smallest denominator (then smallest magnitude) strictly
/// inside (lo, hi). Keeps sample points, and therefore field tags, small.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::OutOfRange, "simplest_between needs lo < hi");
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -detail::simplest_nonneg(-hi, Rational(-lo));
  return detail::simplest_nonneg(lo, hi);
}

}  // namespace knotsig
