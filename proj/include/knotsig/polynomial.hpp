#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/rational.hpp"

namespace knotsig {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }
  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }
  static IntPolynomial monomial(Integer c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
  }
  static IntPolynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& lead() const { return c_.back(); }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  /// Sign of p(x), evaluated on the homogenized form so only integers are touched.
  int sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    const Integer a = num(x);
    const Integer b = den(x);
    Integer acc = c_.back();
    Integer bp = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      bp *= b;
      acc = acc * a + c_[i] * bp;
    }
    return acc.sign();
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  /// gcd of the coefficients, non-negative.
  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return abs(g);
  }

  /// Divides out the (positive) content, keeping the sign.
  IntPolynomial without_content() const {
    if (c_.empty()) return {};
    const Integer g = content();
    std::vector<Integer> v = c_;
    for (auto& x : v) x /= g;
    return IntPolynomial(std::move(v));
  }

  /// Divides out the content and fixes the leading coefficient positive.
  IntPolynomial primitive() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (lead().sign() < 0) g = -g;
    std::vector<Integer> v = c_;
    for (auto& x : v) x /= g;
    return IntPolynomial(std::move(v));
  }

  /// Coefficients reversed: t^deg * p(1/t).
  IntPolynomial reversed() const {
    std::vector<Integer> v(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(v));
  }

  /// Strips the largest power of t dividing p.
  IntPolynomial without_zero_roots() const {
    auto first = std::find_if(c_.begin(), c_.end(), [](const Integer& v) { return v.sign() != 0; });
    return IntPolynomial(std::vector<Integer>(first, c_.end()));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const Integer& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial l, const IntPolynomial& r) { return l += r; }
  friend IntPolynomial operator-(IntPolynomial l, const IntPolynomial& r) { return l -= r; }
  friend IntPolynomial operator*(IntPolynomial l, const Integer& s) { return l *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial r) { return r *= s; }
  IntPolynomial operator-() const { return *this * Integer(-1); }

  friend IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Integer> v(l.c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < l.c_.size(); ++i)
      for (std::size_t j = 0; j < r.c_.size(); ++j) v[i + j] += l.c_[i] * r.c_[j];
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable, highest degree first, in the variable `var`.
  std::string str(char var = 't') const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Integer& v = c_[i];
      if (v.sign() == 0) continue;
      Integer mag = abs(v);
      if (first)
        os << (v.sign() < 0 ? "-" : "");
      else
        os << (v.sign() < 0 ? " - " : " + ");
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

/// Quotient of an exact division in Z[t]; throws if `divisor` does not divide `p`.
inline IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (p.is_zero()) return {};
  const int dd = divisor.degree();
  const int dp = p.degree();
  if (dp < dd) throw Error(ErrorCode::OutOfRange, "inexact polynomial division");
  std::vector<Integer> rem = p.coefficients();
  std::vector<Integer> quot(dp - dd + 1);
  const auto& dc = divisor.coefficients();
  for (int i = dp - dd; i >= 0; --i) {
    const Integer& top = rem[i + dd];
    if (top % divisor.lead() != 0) throw Error(ErrorCode::OutOfRange, "inexact polynomial division");
    Integer q = top / divisor.lead();
    for (int j = 0; j <= dd; ++j) rem[i + j] -= q * dc[j];
    quot[i] = std::move(q);
  }
  for (const auto& r : rem)
    if (r.sign() != 0) throw Error(ErrorCode::OutOfRange, "inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

/// lead(d)^(deg p - deg d + 1) * p = q*d + r, returns r.
inline IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-remainder by zero");
  IntPolynomial r = p;
  int e = std::max(p.degree() - d.degree() + 1, 0);
  const Integer lc = d.lead();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    IntPolynomial s = IntPolynomial::monomial(r.lead(), r.degree() - d.degree());
    r = r * lc - s * d;
    --e;
  }
  for (; e > 0; --e) r *= lc;
  return r;
}

/// Primitive gcd (content dropped, leading coefficient positive).
inline IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial a = p.primitive();
  IntPolynomial b = q.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_part of 0");
  IntPolynomial g = gcd(p, p.derivative());
  return divide_exact(p.primitive(), g).primitive();
}

/// Yun's decomposition: p = c * f[0]^1 * f[1]^2 * ... with each f[i] square-free,
/// primitive, pairwise coprime. Trailing entries are non-constant.
inline std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decomposition of 0");
  IntPolynomial f = p.primitive();
  std::vector<IntPolynomial> out;
  if (f.degree() <= 0) return out;
  IntPolynomial a = gcd(f, f.derivative());
  IntPolynomial b = divide_exact(f, a);
  IntPolynomial c = divide_exact(f.derivative(), a);
  IntPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(a);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

/// Determinant over Z[t] by fraction-free (Bareiss) elimination with row swaps.
/// The empty matrix has determinant 1.
inline IntPolynomial polynomial_det(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::NonSquare, "polynomial_det needs a square array");
  if (n == 0) return IntPolynomial::constant(1);

  bool negate = false;
  IntPolynomial prev = IntPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  IntPolynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace knotsig
