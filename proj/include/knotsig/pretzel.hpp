#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "knotsig/invariants.hpp"

namespace knotsig {

/// Parameters (p1, ..., pn) of a pretzel knot P(p1, ..., pn).
class PretzelParams {
 public:
  explicit PretzelParams(std::vector<long long> params) : params_(std::move(params)) {
    if (params_.empty()) throw Error(ErrorCode::OutOfRange, "pretzel needs at least one parameter");
    for (long long p : params_)
      if (p == 0) throw Error(ErrorCode::OutOfRange, "pretzel parameters must be nonzero");
  }

  const std::vector<long long>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }

  /// Odd number of strands, every one with an odd number of half-twists.
  bool is_odd_pretzel() const {
    return params_.size() % 2 == 1 &&
           std::all_of(params_.begin(), params_.end(), [](long long p) { return p % 2 != 0; });
  }

  std::string str() const {
    std::string s = "P(";
    for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + std::to_string(params_[i]);
    return s + ")";
  }

 private:
  std::vector<long long> params_;
};

/// Seifert matrix of P(3, -3, -2k), k >= 2.
inline SeifertMatrix seifert_matrix_A_k(long long k) {
  if (k < 2) throw Error(ErrorCode::OutOfFamily, "A_k is defined for k >= 2, got " + std::to_string(k));
  IntMatrix m = {
      {-1, -1, 0, 0, -1, 0},
      {0, -1, 0, 0, -1, 0},
      {0, 0, 1, 1, 1, 0},
      {0, 0, 0, 1, 1, 0},
      {0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, Integer(-k)},
  };
  return validate_seifert(std::move(m), "P(3,-3,-" + std::to_string(2 * k) + ")");
}

namespace criterion {
inline constexpr const char* kOddPretzelNotFamily = "odd-pretzel-not-permutation-of-alternating-family";
inline constexpr const char* kOddPretzelFamily = "odd-pretzel-permutation-of-alternating-family";
}  // namespace criterion

/// An odd pretzel knot is doubly slice exactly when its parameters are a
/// permutation of (a, -a, a, -a, ..., a) for some odd a: (n+1)/2 copies of a
/// and (n-1)/2 copies of -a. Any other parameter multiset is obstructed.
inline ObstructionVerdict odd_pretzel_doubly_slice_test(const PretzelParams& p) {
  if (!p.is_odd_pretzel())
    throw Error(ErrorCode::NotOddPretzel, p.str() + " is not an odd pretzel knot");
  std::map<long long, std::size_t> counts;
  for (long long v : p.params()) ++counts[v];
  const std::size_t n = p.size();
  for (const auto& [a, count_a] : counts) {
    if (count_a != (n + 1) / 2) continue;
    const auto it = counts.find(-a);
    const std::size_t count_neg = it == counts.end() ? 0 : it->second;
    if (count_neg == (n - 1) / 2 && count_a + count_neg == n)
      return {Verdict::Inconclusive, std::nullopt, criterion::kOddPretzelFamily};
  }
  return {Verdict::Obstructed, std::nullopt, criterion::kOddPretzelNotFamily};
}

/// Doubly-slice verdict for P(3, -3, -m): the parameter test for odd m, the
/// signature obstruction on A_{m/2} for even m.
inline ObstructionVerdict pretzel_3_minus3_m_verdict(long long m) {
  if (m < 3) throw Error(ErrorCode::OutOfFamily, "P(3,-3,-m) needs m >= 3, got " + std::to_string(m));
  if (m % 2 != 0) return odd_pretzel_doubly_slice_test(PretzelParams({3, -3, -m}));
  return doubly_slice_obstruction(seifert_matrix_A_k(m / 2));
}

}  // namespace knotsig
