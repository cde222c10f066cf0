#pragma once

#include <optional>
#include <vector>

#include "knotsig/polynomial.hpp"

namespace knotsig {

/// Open rational interval holding exactly one distinct real root of the
/// polynomial it was produced for; neither endpoint is a root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

inline const Rational& default_isolation_width() {
  static const Rational w(1, 64);
  return w;
}

/// q, q', then negated pseudo-remainders kept primitive. Each step multiplies
/// the true remainder by a positive constant, so sign variations are exact.
inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& q) {
  std::vector<IntPolynomial> seq;
  if (q.is_zero()) return seq;
  seq.push_back(q);
  IntPolynomial d = q.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int e = a.degree() - b.degree() + 1;
    const bool scale_negative = b.lead().sign() < 0 && e % 2 == 1;
    r = r.without_content();
    seq.push_back(scale_negative ? r : -r);
  }
  return seq;
}

inline int sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace detail {

class Bisector {
 public:
  Bisector(const IntPolynomial& q, const Rational& width) : q_(q), seq_(sturm_sequence(q)), width_(width) {}

  void run(const Rational& a, const Rational& b, std::vector<IsolatingInterval>& out) const {
    split(a, b, sign_variations(seq_, a), sign_variations(seq_, b), out);
  }

 private:
  void split(const Rational& a, const Rational& b, int va, int vb,
             std::vector<IsolatingInterval>& out) const {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1 && b - a < width_) {
      out.push_back({a, b, 1});
      return;
    }
    Rational mid = (a + b) / 2;
    // Nudge off exact roots; only finitely many exist, so this terminates.
    for (Rational step = (b - a) / 8; q_.sign_at(mid) == 0; step /= 2) mid = (a + b) / 2 + step;
    const int vm = sign_variations(seq_, mid);
    split(a, mid, va, vm, out);
    split(mid, b, vm, vb, out);
  }

  const IntPolynomial& q_;
  std::vector<IntPolynomial> seq_;
  Rational width_;
};

// Removes the linear factor (den*x - num) from a square-free primitive q.
inline IntPolynomial deflate_at(const IntPolynomial& q, const Rational& root) {
  return divide_exact(q, IntPolynomial{Integer(-num(root)), den(root)}).primitive();
}

// For a root `edge` of square-free q, a point c strictly between edge and
// `toward` such that no root of q lies between edge and c (inclusive of c).
inline Rational step_off_root(const IntPolynomial& q, const Rational& edge, const Rational& toward) {
  const IntPolynomial rest = deflate_at(q, edge);
  const auto seq = sturm_sequence(rest);
  const int v_edge = sign_variations(seq, edge);
  for (Rational delta = (toward - edge) / 2;; delta /= 2) {
    Rational c = edge + delta;
    if (q.sign_at(c) != 0 && sign_variations(seq, c) == v_edge) return c;
  }
}

}  // namespace detail

/// Isolates the distinct real roots of p inside the open interval (lo, hi).
/// Intervals are sorted ascending, pairwise disjoint, of width < `width`, and
/// carry the root multiplicity from the square-free decomposition of p.
inline std::vector<IsolatingInterval> sturm_isolate(const IntPolynomial& p, const Rational& lo,
                                                    const Rational& hi,
                                                    const Rational& width = default_isolation_width()) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sturm_isolate of 0");
  if (!(lo < hi)) throw Error(ErrorCode::OutOfRange, "sturm_isolate needs lo < hi");
  if (width.sign() <= 0) throw Error(ErrorCode::OutOfRange, "isolation width must be positive");

  IntPolynomial q = squarefree_part(p);
  std::vector<IsolatingInterval> out;
  if (q.degree() <= 0) return out;
  // Roots sitting on the bounds are excluded; move the bounds off them.
  const Rational middle = (lo + hi) / 2;
  const Rational a = q.sign_at(lo) == 0 ? detail::step_off_root(q, lo, middle) : lo;
  const Rational b = q.sign_at(hi) == 0 ? detail::step_off_root(q, hi, middle) : hi;

  detail::Bisector(q, width).run(a, b, out);

  const auto factors = squarefree_decomposition(p);
  for (auto& iv : out) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      // Each factor is square-free, so a root inside shows up as a sign change.
      if (factors[i].degree() > 0 && factors[i].sign_at(iv.lo) != factors[i].sign_at(iv.hi)) {
        iv.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return out;
}

/// Shrinks an isolating interval of square-free q below `width` by sign-change
/// bisection. A midpoint landing on the root recentres the interval on it.
inline IsolatingInterval refine_interval(const IntPolynomial& q, IsolatingInterval iv, const Rational& width) {
  int sign_lo = q.sign_at(iv.lo);
  while (!(iv.width() < width)) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = q.sign_at(mid);
    if (s == 0) {
      Rational delta = std::min(width, iv.width()) / 4;
      iv.lo = mid - delta;
      iv.hi = mid + delta;
      break;
    }
    if (s == sign_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

/// The root isolated by `iv` when it is rational. A rational root a/b of the
/// primitive q has b | lead(q); two fractions with denominators <= L differ by
/// at least 1/L^2, so after refining below that width the simplest rational in
/// the interval is the only candidate.
inline std::optional<Rational> rational_root_in(const IntPolynomial& q_any, const IsolatingInterval& iv) {
  const IntPolynomial q = squarefree_part(q_any);
  if (q.degree() < 1) return std::nullopt;
  const Integer lead = q.lead();
  const IsolatingInterval tight = refine_interval(q, iv, Rational(1, lead * lead));
  Rational candidate = simplest_between(tight.lo, tight.hi);
  if (q.sign_at(candidate) == 0) return candidate;
  return std::nullopt;
}

}  // namespace knotsig
