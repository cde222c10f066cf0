#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "knotsig/quad_field.hpp"

namespace knotsig {

/// Square matrix over Q(u), u^2 = -D, with entry(j,i) = conj(entry(i,j)).
class HermitianMatrix {
 public:
  /// Validates the Hermitian invariant and the common field tag.
  explicit HermitianMatrix(std::vector<std::vector<QuadElement>> entries)
      : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    for (const auto& row : entries_)
      if (row.size() != n) throw Error(ErrorCode::NonSquare, "HermitianMatrix needs a square array");
    if (n == 0) return;
    field_ = entries_[0][0].field();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (entries_[i][j].field() != *field_)
          throw Error(ErrorCode::FieldMismatch, "entries carry different D tags");
        if (!(entries_[j][i] == entries_[i][j].conj()))
          throw Error(ErrorCode::OutOfRange, "matrix is not Hermitian");
      }
  }

  std::size_t dimension() const { return entries_.size(); }
  const QuadElement& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<QuadElement>>& entries() const { return entries_; }
  /// Shared D tag; nullopt for the 0x0 matrix.
  const std::optional<Integer>& field() const { return field_; }

 private:
  std::vector<std::vector<QuadElement>> entries_;
  std::optional<Integer> field_;
};

struct Inertia {
  int rank = 0;
  int signature = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Rank and signature by congruence diagonalization.
///
/// While some remaining diagonal entry is nonzero, the first one is used as
/// a pivot: it is rational, its sign is recorded, and the Schur complement
/// replaces the block. When every remaining diagonal entry vanishes but an
/// off-diagonal m = M(i,j) does not, the pair (i,j) spans a hyperbolic block
/// [[0, m], [conj m, 0]] of inertia (+1, -1); its Schur complement is
///   M'(r,s) = M(r,s) - M(r,i) M(j,s) / conj(m) - M(r,j) M(i,s) / m.
/// All sign decisions are rational comparisons.
inline Inertia hermitian_rank_signature(const HermitianMatrix& matrix) {
  std::vector<std::vector<QuadElement>> m = matrix.entries();
  std::vector<std::size_t> live(m.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  Inertia result;
  while (!live.empty()) {
    auto pivot = std::find_if(live.begin(), live.end(),
                              [&](std::size_t i) { return !m[i][i].is_zero(); });
    if (pivot != live.end()) {
      const std::size_t k = *pivot;
      const Rational p = m[k][k].real();
      result.rank += 1;
      result.signature += p.sign();
      live.erase(pivot);
      const Rational inv = 1 / p;
      for (std::size_t r : live) {
        if (m[r][k].is_zero()) continue;
        const QuadElement factor = m[r][k] * inv;
        for (std::size_t s : live) m[r][s] -= factor * m[k][s];
      }
      continue;
    }

    std::optional<std::pair<std::size_t, std::size_t>> block;
    for (std::size_t a = 0; a < live.size() && !block; ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (!m[live[a]][live[b]].is_zero()) {
          block = std::pair{live[a], live[b]};
          break;
        }
    if (!block) break;  // remaining block is zero

    const auto [i, j] = *block;
    const QuadElement inv_m = m[i][j].inverse();
    const QuadElement inv_mbar = m[j][i].inverse();
    result.rank += 2;
    std::erase(live, i);
    std::erase(live, j);
    std::vector<QuadElement> left_i, left_j;
    for (std::size_t r : live) {
      left_i.push_back(m[r][i] * inv_mbar);
      left_j.push_back(m[r][j] * inv_m);
    }
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t s : live)
        m[live[a]][s] -= left_i[a] * m[j][s] + left_j[a] * m[i][s];
  }
  return result;
}

}  // namespace knotsig
