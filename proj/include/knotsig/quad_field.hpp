#pragma once

#include <ostream>

#include "knotsig/rational.hpp"

namespace knotsig {

/// Element a + b*u of Q(u) with u^2 = -D, D a positive square-free integer.
/// Elements only combine when their field tags agree.
class QuadElement {
 public:
  explicit QuadElement(Integer d, Rational a = 0, Rational b = 0)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_.sign() <= 0) throw Error(ErrorCode::FieldMismatch, "field tag D must be positive");
  }

  const Rational& real() const { return a_; }
  const Rational& imag() const { return b_; }
  const Integer& field() const { return d_; }

  bool is_zero() const { return a_.sign() == 0 && b_.sign() == 0; }
  bool is_real() const { return b_.sign() == 0; }

  QuadElement conj() const { return QuadElement(d_, a_, -b_); }
  /// a^2 + D b^2, the field norm; positive for nonzero elements.
  Rational norm() const { return a_ * a_ + Rational(d_) * b_ * b_; }

  QuadElement inverse() const {
    if (is_zero()) throw Error(ErrorCode::OutOfRange, "inverse of zero");
    Rational n = norm();
    return QuadElement(d_, a_ / n, -b_ / n);
  }

  QuadElement& operator+=(const QuadElement& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadElement& operator-=(const QuadElement& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadElement& operator*=(const QuadElement& o) {
    check(o);
    Rational a = a_ * o.a_ - Rational(d_) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadElement& operator*=(const Rational& s) {
    a_ *= s;
    b_ *= s;
    return *this;
  }
  QuadElement& operator/=(const QuadElement& o) { return *this *= o.inverse(); }

  friend QuadElement operator+(QuadElement l, const QuadElement& r) { return l += r; }
  friend QuadElement operator-(QuadElement l, const QuadElement& r) { return l -= r; }
  friend QuadElement operator*(QuadElement l, const QuadElement& r) { return l *= r; }
  friend QuadElement operator*(QuadElement l, const Rational& r) { return l *= r; }
  friend QuadElement operator*(const Rational& l, QuadElement r) { return r *= l; }
  friend QuadElement operator/(QuadElement l, const QuadElement& r) { return l /= r; }
  QuadElement operator-() const { return QuadElement(d_, -a_, -b_); }

  friend bool operator==(const QuadElement& l, const QuadElement& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadElement& e) {
    return os << to_string(e.a_) << " + " << to_string(e.b_) << "*u[D=" << e.d_ << "]";
  }

 private:
  void check(const QuadElement& o) const {
    if (o.d_ != d_)
      throw Error(ErrorCode::FieldMismatch,
                  "D=" + d_.str() + " combined with D=" + o.d_.str());
  }

  Rational a_;
  Rational b_;
  Integer d_;
};

}  // namespace knotsig
