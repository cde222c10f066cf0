#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "knotsig/pretzel.hpp"

namespace knotsig {
namespace {

TEST(PretzelParams, OddFlag) {
  EXPECT_TRUE(PretzelParams({3, -3, -5}).is_odd_pretzel());
  EXPECT_FALSE(PretzelParams({3, -3, -4}).is_odd_pretzel());
  EXPECT_FALSE(PretzelParams({3, -3}).is_odd_pretzel());
  EXPECT_THROW(PretzelParams({3, 0, 1}), Error);
  EXPECT_THROW(PretzelParams({}), Error);
  EXPECT_EQ(PretzelParams({3, -3, -5}).str(), "P(3,-3,-5)");
}

TEST(SeifertAk, MatchesTheFamily) {
  const auto a2 = seifert_matrix_A_k(2);
  EXPECT_EQ(a2.dimension(), 6u);
  EXPECT_EQ(a2(5, 5), -2);
  EXPECT_EQ(a2(0, 0), -1);
  EXPECT_EQ(a2(0, 4), -1);
  EXPECT_EQ(a2(5, 4), 1);
  EXPECT_EQ(seifert_matrix_A_k(3)(5, 5), -3);
  try {
    seifert_matrix_A_k(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfFamily);
  }
}

TEST(SeifertAk, InvariantsIndependentOfK) {
  const IntPolynomial expected{1, -2, 3, -2, 1};
  for (long long k = 2; k <= 10; ++k) {
    const auto a = seifert_matrix_A_k(k);
    EXPECT_EQ(alexander_polynomial(a), expected) << k;
    EXPECT_EQ(levine_tristram_at(a, CirclePoint(Rational(1, 2), Half::Upper)), (Inertia{5, -1})) << k;
  }
}

TEST(SeifertAk, ProfileAndSliceVerdict) {
  const auto a = seifert_matrix_A_k(2);
  const auto prof = signature_profile(a);
  ASSERT_EQ(prof.jumps.size(), 1u);
  EXPECT_TRUE(prof.jumps[0].contains(Rational(1, 2)));
  EXPECT_EQ(prof.jumps[0].multiplicity, 2);
  EXPECT_EQ(prof.arc_values.front(), 0);
  EXPECT_EQ(slice_obstruction(a).verdict, Verdict::Inconclusive);
  const auto ds = doubly_slice_obstruction(a);
  EXPECT_EQ(ds.verdict, Verdict::Obstructed);
  ASSERT_TRUE(ds.witness.has_value());
  EXPECT_EQ(ds.witness->point, CirclePoint(Rational(1, 2), Half::Upper));
  EXPECT_EQ(ds.witness->inertia, (Inertia{5, -1}));
}

TEST(OddPretzel, Classifier) {
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({3, -3, -5})).verdict, Verdict::Obstructed);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({3, -3, -3})).verdict, Verdict::Inconclusive);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({5, -5, 5})).verdict, Verdict::Inconclusive);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({7})).verdict, Verdict::Inconclusive);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({3, 3, 3})).verdict, Verdict::Obstructed);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({1, -1, 1, -1, 1})).verdict, Verdict::Inconclusive);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({1, -1, 1, 1, -1})).verdict, Verdict::Inconclusive);
  EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams({1, -1, 1, 1, 1})).verdict, Verdict::Obstructed);
  try {
    odd_pretzel_doubly_slice_test(PretzelParams({3, -3, -4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOddPretzel);
  }
}

TEST(OddPretzel, PermutationInvariant) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> mag(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 * (trial % 3) + 3;
    std::vector<long long> params(n);
    if (trial % 2 == 0) {
      const long long a = (2 * mag(rng) + 1) * (trial % 4 == 0 ? 1 : -1);
      for (std::size_t i = 0; i < n; ++i) params[i] = i % 2 == 0 ? a : -a;
    } else {
      for (auto& p : params) p = (2 * mag(rng) + 1) * (rng() % 2 ? 1 : -1);
    }
    const Verdict base = odd_pretzel_doubly_slice_test(PretzelParams(params)).verdict;
    if (trial % 2 == 0) {
      EXPECT_EQ(base, Verdict::Inconclusive);
    }
    for (int s = 0; s < 5; ++s) {
      std::shuffle(params.begin(), params.end(), rng);
      EXPECT_EQ(odd_pretzel_doubly_slice_test(PretzelParams(params)).verdict, base);
    }
  }
}

TEST(PretzelFamily, Dispatch) {
  const auto m4 = pretzel_3_minus3_m_verdict(4);
  EXPECT_EQ(m4.verdict, Verdict::Obstructed);
  ASSERT_TRUE(m4.witness.has_value());
  EXPECT_EQ(m4.witness->point.x(), Rational(1, 2));
  EXPECT_EQ(m4.witness->inertia, (Inertia{5, -1}));

  const auto m5 = pretzel_3_minus3_m_verdict(5);
  EXPECT_EQ(m5.verdict, Verdict::Obstructed);
  EXPECT_EQ(m5.criterion, criterion::kOddPretzelNotFamily);

  EXPECT_EQ(pretzel_3_minus3_m_verdict(3).verdict, Verdict::Inconclusive);
  EXPECT_THROW(pretzel_3_minus3_m_verdict(2), Error);
  for (long long m = 4; m <= 12; ++m) EXPECT_EQ(pretzel_3_minus3_m_verdict(m).verdict, Verdict::Obstructed) << m;
}

}  // namespace
}  // namespace knotsig
