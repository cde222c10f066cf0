#pragma once

#include <string>
#include <string_view>

#include "knotsig/quad_field.hpp"

namespace knotsig {

enum class Half { Upper, Lower, RealAxis };

constexpr std::string_view to_string(Half h) {
  switch (h) {
    case Half::Upper: return "upper";
    case Half::Lower: return "lower";
    case Half::RealAxis: return "real-axis";
  }
  return "?";
}

/// Point omega = x + i*y on the unit circle with rational x = cos(theta);
/// y = +sqrt(1 - x^2) on the upper half, -sqrt(1 - x^2) on the lower half.
///
/// With x = p/q in lowest terms, q^2 - p^2 = s^2 * D for square-free D, so
/// i*y = +-(s/q) * u where u^2 = -D and omega lies in Q(u).
class CirclePoint {
 public:
  CirclePoint(Rational x, Half half) : x_(std::move(x)) {
    if (x_ > 1 || x_ < -1) throw Error(ErrorCode::OutOfRange, "cosine " + to_string(x_) + " outside [-1, 1]");
    const bool on_axis = x_ == 1 || x_ == -1;
    if (!on_axis && half == Half::RealAxis)
      throw Error(ErrorCode::OutOfRange, "real-axis point needs x = +-1");
    half_ = on_axis ? Half::RealAxis : half;
    if (on_axis) {
      field_ = 1;
      imag_ = 0;
      return;
    }
    const Integer p = num(x_);
    const Integer q = den(x_);
    const Integer n = q * q - p * p;
    field_ = squarefree_kernel(n);
    const Integer s = boost::multiprecision::sqrt(Integer(n / field_));
    imag_ = Rational(s, q);
    if (half_ == Half::Lower) imag_ = -imag_;
  }

  static CirclePoint one() { return {Rational(1), Half::RealAxis}; }
  static CirclePoint minus_one() { return {Rational(-1), Half::RealAxis}; }

  const Rational& x() const { return x_; }
  Half half() const { return half_; }
  /// Square-free D with omega in Q(sqrt(-D)); 1 on the real axis.
  const Integer& field() const { return field_; }
  /// c with omega = x + c*u.
  const Rational& u_coefficient() const { return imag_; }

  QuadElement omega() const { return QuadElement(field_, x_, imag_); }
  CirclePoint conj() const {
    return {x_, half_ == Half::Upper ? Half::Lower : half_ == Half::Lower ? Half::Upper : Half::RealAxis};
  }

  friend bool operator==(const CirclePoint& l, const CirclePoint& r) {
    return l.x_ == r.x_ && l.half_ == r.half_;
  }

 private:
  Rational x_;
  Half half_ = Half::RealAxis;
  Integer field_;
  Rational imag_;
};

}  // namespace knotsig
