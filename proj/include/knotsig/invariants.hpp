#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/circle.hpp"
#include "knotsig/hermitian.hpp"
#include "knotsig/seifert.hpp"
#include "knotsig/sturm.hpp"

namespace knotsig {

/// det(A - t A^T), stripped of its t^j factor and signed so that Delta(1) = +1.
inline IntPolynomial alexander_polynomial(const SeifertMatrix& a) {
  const std::size_t n = a.dimension();
  PolyMatrix m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = IntPolynomial{a(i, j), Integer(-a(j, i))};
  IntPolynomial delta = polynomial_det(std::move(m)).without_zero_roots();
  if (delta.eval(Integer(1)).sign() < 0) delta = -delta;
  return delta;
}

/// |Delta(-1)|.
inline Integer knot_determinant(const SeifertMatrix& a) {
  return abs(alexander_polynomial(a).eval(Integer(-1)));
}

/// Rewrites the unit-circle roots of a (+-)reciprocal Delta as real roots in
/// x = cos(theta). Factors (t - 1) and (t + 1) are removed first; what is left
/// is palindromic of degree 2m, so t^-m * Delta = P(t + 1/t) and the
/// substitution t + 1/t = 2x turns each t^j + t^-j into 2 T_j(x).
inline IntPolynomial trace_polynomial(const IntPolynomial& delta) {
  if (delta.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "trace_polynomial of 0");
  const IntPolynomial rev = delta.reversed();
  if (rev != delta && rev != -delta)
    throw Error(ErrorCode::NotReciprocal, delta.str() + " is not reciprocal up to sign");

  IntPolynomial d = delta;
  const IntPolynomial t_minus_1{-1, 1};
  const IntPolynomial t_plus_1{1, 1};
  while (d.degree() > 0 && d.eval(Integer(1)).sign() == 0) d = divide_exact(d, t_minus_1);
  while (d.degree() > 0 && d.eval(Integer(-1)).sign() == 0) d = divide_exact(d, t_plus_1);
  if (d.degree() % 2 != 0 || d.reversed() != d)
    throw Error(ErrorCode::NotReciprocal, delta.str() + " does not reduce to a palindromic factor");

  const int m = d.degree() / 2;
  const IntPolynomial two_x{0, 2};
  IntPolynomial prev = IntPolynomial::constant(1);  // T_0
  IntPolynomial cur = IntPolynomial::variable();    // T_1
  IntPolynomial p = IntPolynomial::constant(d.coeff(m));
  for (int j = 1; j <= m; ++j) {
    p += cur * Integer(2 * d.coeff(m + j));
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return p.without_content();
}

/// (1 - omega) A + (1 - conj omega) A^T over Q(u):
/// real part (1 - x)(A + A^T), u-part -c (A - A^T) where omega = x + c u.
inline HermitianMatrix signature_matrix(const SeifertMatrix& a, const CirclePoint& omega) {
  const std::size_t n = a.dimension();
  const Rational real_scale = 1 - omega.x();
  const Rational& c = omega.u_coefficient();
  std::vector<std::vector<QuadElement>> m(n, std::vector<QuadElement>(n, QuadElement(omega.field())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = QuadElement(omega.field(), real_scale * Rational(a(i, j) + a(j, i)),
                            -c * Rational(a(i, j) - a(j, i)));
  return HermitianMatrix(std::move(m));
}

inline Inertia levine_tristram_at(const SeifertMatrix& a, const CirclePoint& omega) {
  return hermitian_rank_signature(signature_matrix(a, omega));
}

/// sigma_K on the closed upper half circle, as a step function of x = cos(theta).
struct SignatureProfile {
  IntPolynomial alexander;
  IntPolynomial trace;
  /// Isolating intervals of the roots of `trace` in (-1, 1), by decreasing x.
  std::vector<IsolatingInterval> jumps;
  /// Root of each jump when its cosine is rational.
  std::vector<std::optional<Rational>> jump_roots;
  /// arc_values[i] holds on the arc between jumps[i-1] and jumps[i]; arc 0 touches omega = 1.
  std::vector<int> arc_values;
  /// The rational x at which each arc value was computed.
  std::vector<Rational> arc_samples;
  int value_at_minus_one = 0;
};

inline SignatureProfile signature_profile(const SeifertMatrix& a) {
  SignatureProfile prof;
  prof.alexander = alexander_polynomial(a);
  prof.trace = trace_polynomial(prof.alexander);

  if (prof.trace.degree() > 0) {
    const IntPolynomial sqfree = squarefree_part(prof.trace);
    prof.jumps = sturm_isolate(prof.trace, Rational(-1), Rational(1));
    std::reverse(prof.jumps.begin(), prof.jumps.end());
    // Arcs at the ends need room between the outermost interval and +-1.
    if (!prof.jumps.empty()) {
      auto& top = prof.jumps.front();
      while (top.hi >= 1) top = refine_interval(sqfree, top, top.width() / 2);
      auto& bottom = prof.jumps.back();
      while (bottom.lo <= -1) bottom = refine_interval(sqfree, bottom, bottom.width() / 2);
    }
    for (const auto& iv : prof.jumps) prof.jump_roots.push_back(rational_root_in(sqfree, iv));
  }

  // Gap i runs from jumps[i].hi (or -1) up to jumps[i-1].lo (or 1).
  for (std::size_t i = 0; i <= prof.jumps.size(); ++i) {
    const Rational upper = i == 0 ? Rational(1) : prof.jumps[i - 1].lo;
    const Rational lower = i == prof.jumps.size() ? Rational(-1) : prof.jumps[i].hi;
    const Rational sample = lower < upper ? simplest_between(lower, upper) : lower;
    const Inertia in = levine_tristram_at(a, CirclePoint(sample, Half::Upper));
    prof.arc_samples.push_back(sample);
    prof.arc_values.push_back(in.signature);
  }
  prof.value_at_minus_one = levine_tristram_at(a, CirclePoint::minus_one()).signature;
  return prof;
}

enum class Verdict { Obstructed, Inconclusive };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::Obstructed ? "Obstructed" : "Inconclusive";
}

struct Witness {
  CirclePoint point;
  Inertia inertia;
};

struct ObstructionVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;
  std::string criterion;
};

namespace criterion {
inline constexpr const char* kArc = "nonzero-signature-on-arc";
inline constexpr const char* kMinusOne = "nonzero-signature-at-minus-one";
inline constexpr const char* kRoot = "nonzero-signature-at-alexander-root";
inline constexpr const char* kArcsVanish = "signature-vanishes-on-arcs";
inline constexpr const char* kAllVanish = "signature-vanishes-at-all-evaluated-points";
}  // namespace criterion

namespace detail {

inline std::optional<ObstructionVerdict> arc_witness(const SeifertMatrix& a, const SignatureProfile& prof) {
  for (std::size_t i = 0; i < prof.arc_values.size(); ++i) {
    if (prof.arc_values[i] == 0) continue;
    CirclePoint pt(prof.arc_samples[i], Half::Upper);
    return ObstructionVerdict{Verdict::Obstructed, Witness{pt, levine_tristram_at(a, pt)}, criterion::kArc};
  }
  return std::nullopt;
}

}  // namespace detail

/// A slice knot has sigma_K = 0 away from the roots of Delta.
inline ObstructionVerdict slice_obstruction(const SeifertMatrix& a, const SignatureProfile& prof) {
  if (auto v = detail::arc_witness(a, prof)) return *v;
  return {Verdict::Inconclusive, std::nullopt, criterion::kArcsVanish};
}

inline ObstructionVerdict slice_obstruction(const SeifertMatrix& a) {
  return slice_obstruction(a, signature_profile(a));
}

/// A doubly slice knot has sigma_K = 0 on the whole circle. Checked on every
/// arc, at omega = -1, and at each jump whose cosine is rational; the count of
/// irrational-cosine jumps that could not be evaluated is appended to the tag.
inline ObstructionVerdict doubly_slice_obstruction(const SeifertMatrix& a, const SignatureProfile& prof) {
  if (auto v = detail::arc_witness(a, prof)) return *v;
  if (prof.value_at_minus_one != 0) {
    const CirclePoint pt = CirclePoint::minus_one();
    return {Verdict::Obstructed, Witness{pt, levine_tristram_at(a, pt)}, criterion::kMinusOne};
  }
  int unevaluated = 0;
  for (const auto& root : prof.jump_roots) {
    if (!root) {
      ++unevaluated;
      continue;
    }
    const CirclePoint pt(*root, Half::Upper);
    const Inertia in = levine_tristram_at(a, pt);
    if (in.signature != 0) return {Verdict::Obstructed, Witness{pt, in}, criterion::kRoot};
  }
  std::string tag = criterion::kAllVanish;
  if (unevaluated > 0) tag += ";unevaluated-irrational-roots=" + std::to_string(unevaluated);
  return {Verdict::Inconclusive, std::nullopt, tag};
}

inline ObstructionVerdict doubly_slice_obstruction(const SeifertMatrix& a) {
  return doubly_slice_obstruction(a, signature_profile(a));
}

}  // namespace knotsig
