#include <gtest/gtest.h>

#include "sqfbrace/counting.hpp"
#include "sqfbrace/errors.hpp"
#include "support.hpp"

using namespace sqfb;
using sqfb::testing::squarefree_orders;

TEST(Counting, PairContextExamples) {
  auto s3 = canonicalize(2, 3, 2);
  auto ctx = pair_context(s3, s3);
  EXPECT_EQ(ctx.w, 1);
  EXPECT_EQ(ctx.gamma, 3);
  EXPECT_TRUE(ctx.gamma_divides_e);
  EXPECT_EQ(ctx.omega_g, 1);

  auto big = pair_context(canonicalize(2, 21, 20), canonicalize(6, 7, 3));
  EXPECT_EQ(big.gamma, 21);
  EXPECT_FALSE(big.gamma_divides_e);
  EXPECT_THROW(pair_context(s3, canonicalize(1, 10, 1)), OrderMismatch);
}

TEST(Counting, SmallValues) {
  auto c6 = canonicalize(1, 6, 1), s3 = canonicalize(2, 3, 2);
  EXPECT_EQ(count_skew_braces(c6, c6), 1);
  EXPECT_EQ(count_skew_braces(c6, s3), 2);
  EXPECT_EQ(count_skew_braces(s3, c6), 1);
  EXPECT_EQ(count_skew_braces(s3, s3), 2);
  EXPECT_EQ(count_skew_braces(canonicalize(2, 21, 20), canonicalize(6, 7, 3)), 0);
}

TEST(Counting, MatrixTotalsForTwoPrimes) {
  for (Int q : {2, 3, 5, 7})
    for (Int p = q + 1; p < 60; ++p)
      if (is_squarefree(p) && prime_factors(p).size() == 1 && p % q == 1)
        EXPECT_EQ(count_matrix(p * q).total, 2 * q + 2) << p << "*" << q;
  EXPECT_EQ(count_matrix(15).total, 1);
  EXPECT_THROW(count_matrix(18), NotSquarefree);
}

TEST(Counting, MatrixTotalsAreSums) {
  for (Int n : squarefree_orders(120)) {
    auto cm = count_matrix(n);
    Int sum = 0;
    for (const auto& row : cm.entries)
      for (Int x : row) sum += x;
    EXPECT_EQ(cm.total, sum);
    Int rows = 0, cols = 0;
    for (Int x : cm.row_totals()) rows += x;
    for (Int x : cm.column_totals()) cols += x;
    EXPECT_EQ(rows, sum);
    EXPECT_EQ(cols, sum);
  }
}

// Properties over every pair of order <= 100.
TEST(Counting, FormulaProperties) {
  for (Int n : squarefree_orders(100)) {
    auto groups = enumerate_groups(n);
    for (const auto& M : groups)
      for (const auto& A : groups) {
        auto ctx = pair_context(M, A);
        const Int b = count_skew_braces(M, A);
        EXPECT_EQ(b == 0, !ctx.gamma_divides_e) << M.label() << " " << A.label();
        if (A.is_cyclic()) EXPECT_EQ(b, 1);
        EXPECT_EQ(ctx.w, euler_phi(std::gcd(M.d, A.d)));
        // depends only on (d, g) of A and (delta, gamma) of M
        for (const auto& A2 : groups)
          if (A2.d == A.d && A2.g() == A.g()) EXPECT_EQ(count_skew_braces(M, A2), b);
        for (const auto& M2 : groups)
          if (M2.d == M.d && M2.g() == M.g()) EXPECT_EQ(count_skew_braces(M2, A), b);
      }
  }
}

TEST(Counting, TwoPrimeClosedForm) {
  auto t = pq_closed_form(7, 3);
  EXPECT_EQ(t.entries, (std::vector<std::vector<Int>>{{1, 2}, {1, 4}}));
  EXPECT_EQ(t.total, 8);
  EXPECT_THROW(pq_closed_form(5, 3), CongruenceFails);
}

TEST(Counting, ThreePrimeClosedForm) {
  auto t = three_prime_closed_form(2, 3, 7);
  EXPECT_EQ(t.entries[5][5], 4);
  EXPECT_EQ(t.row_totals[0], 13);
  EXPECT_EQ(t.total, 78);
  EXPECT_EQ(t.expand().entries, count_matrix(42).entries);
  auto t2 = three_prime_closed_form(2, 3, 13);
  EXPECT_EQ(t2.expand().entries, count_matrix(78).entries);
  EXPECT_EQ(t2.total, count_matrix(78).total);
  auto t3 = three_prime_closed_form(3, 7, 43);
  EXPECT_EQ(t3.expand().entries, count_matrix(3 * 7 * 43).entries);
  EXPECT_EQ(t3.total, count_matrix(3 * 7 * 43).total);
  EXPECT_THROW(three_prime_closed_form(2, 3, 5), CongruenceFails);
}

TEST(Counting, SpecialCases) {
  auto s3 = canonicalize(2, 3, 2), c6 = canonicalize(1, 6, 1);
  EXPECT_EQ(corollary_cases(c6, s3), 2);
  EXPECT_EQ(corollary_cases(s3, c6), 1);
  auto dihedral = canonicalize(2, 15, 14), c30 = canonicalize(1, 30, 1);
  EXPECT_TRUE(dihedral.is_dihedral());
  EXPECT_EQ(corollary_cases(c30, dihedral), 4);
  EXPECT_FALSE(corollary_cases(canonicalize(2, 15, 4), canonicalize(2, 15, 11)).has_value());
}
