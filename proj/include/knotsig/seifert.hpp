#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/polynomial.hpp"

namespace knotsig {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Determinant of a square integer matrix (Bareiss over Z).
inline Integer integer_det(const IntMatrix& m) {
  PolyMatrix pm(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& v : m[i]) pm[i].push_back(IntPolynomial::constant(v));
  return polynomial_det(std::move(pm)).coeff(0);
}

/// Seifert matrix of a knot: even-dimensional square integer matrix whose
/// skew part A - A^T has determinant 1. The 0x0 matrix is the unknot.
class SeifertMatrix {
 public:
  std::size_t dimension() const { return entries_.size(); }
  std::size_t genus() const { return genus_; }
  const IntMatrix& entries() const { return entries_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::optional<std::string>& name() const { return name_; }

  friend SeifertMatrix validate_seifert(IntMatrix entries, std::optional<std::string> name);

 private:
  SeifertMatrix(IntMatrix entries, std::optional<std::string> name)
      : entries_(std::move(entries)), name_(std::move(name)), genus_(entries_.size() / 2) {}

  IntMatrix entries_;
  std::optional<std::string> name_;
  std::size_t genus_;
};

inline SeifertMatrix validate_seifert(IntMatrix entries, std::optional<std::string> name = std::nullopt) {
  const std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n) throw Error(ErrorCode::NonSquare, "Seifert matrix must be square");
  if (n % 2 != 0)
    throw Error(ErrorCode::OddDimension, "Seifert matrix has odd dimension " + std::to_string(n));
  IntMatrix skew(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) skew[i][j] = entries[i][j] - entries[j][i];
  const Integer d = integer_det(skew);
  if (d != 1) throw Error(ErrorCode::NotUnimodularSkew, "det(A - A^T) = " + d.str() + ", expected 1");
  return SeifertMatrix(std::move(entries), std::move(name));
}

}  // namespace knotsig
