#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stpcs/stp.hpp"

using namespace stpcs;

namespace {

constexpr double kTol = 1e-12;

}  // namespace

TEST(Kron, IdentityFactor) {
  const DenseMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(kron(DenseMatrix::identity(1), a), a);
}

TEST(Kron, ColumnTimesRow) {
  EXPECT_EQ(kron(DenseMatrix{{1}, {-1}}, DenseMatrix{{1, 1, 1}}), (DenseMatrix{{1, 1, 1}, {-1, -1, -1}}));
}

TEST(Kron, IdentityTimesRow) {
  EXPECT_EQ(kron(DenseMatrix::identity(2), DenseMatrix{{1, 1}}), (DenseMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}));
}

TEST(Kron, MatchesOracleOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4);
    const auto b = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4);
    EXPECT_EQ(kron(a, b), oracle::kron(a, b));
  }
}

TEST(Swap, DegenerateIsIdentity) {
  EXPECT_EQ(swap_matrix(1, 4), DenseMatrix::identity(4));
  EXPECT_EQ(swap_matrix(4, 1), DenseMatrix::identity(4));
}

TEST(Swap, TwoByTwoExchangesMiddleEntries) {
  const Signal x{11, 12, 21, 22};
  EXPECT_EQ(swap_matrix(2, 2) * x, (Signal{11, 21, 12, 22}));
}

TEST(Swap, MatchesOracleAndInvertsItsTranspose) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto w = swap_matrix(m, n);
      EXPECT_EQ(w, oracle::swap(m, n)) << m << "x" << n;
      EXPECT_EQ(w * swap_matrix(n, m), DenseMatrix::identity(m * n));
      for (std::size_t i = 0; i < m * n; ++i) {
        double row = 0, col = 0;
        for (std::size_t j = 0; j < m * n; ++j) {
          row += w(i, j);
          col += w(j, i);
        }
        EXPECT_EQ(row, 1.0);
        EXPECT_EQ(col, 1.0);
      }
    }
}

TEST(Swap, ExchangesKroneckerFactors) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const auto x = oracle::random_matrix(rng, m, 1), y = oracle::random_matrix(rng, n, 1);
    EXPECT_EQ(swap_matrix(m, n) * oracle::kron(x, y), oracle::kron(y, x));
  }
}

TEST(Swap, ConjugatesLeftLiftIntoRightLift) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4, s = 1 + rng() % 4;
    const auto a = oracle::random_int_matrix(rng, m, n);
    const auto x = oracle::random_int_signal(rng, n * s);
    const Signal lhs = lift(a, s, Side::Left) * x;
    const Signal rhs = swap_matrix(s, m) * (lift(a, s, Side::Right) * (swap_matrix(n, s) * x));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Lift, SignalsMatchKroneckerOracle) {
  const Signal x{1, 2, 3};
  EXPECT_EQ(lift(x, 2, Side::Left), (Signal{1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(lift(x, 2, Side::Right), (Signal{1, 2, 3, 1, 2, 3}));
  EXPECT_EQ(lift(x, 3, Side::Left), oracle::lift(x, 3, Side::Left));
  EXPECT_EQ(lift(x, 3, Side::Right), oracle::lift(x, 3, Side::Right));
}

TEST(MmStp, OneByTwoTimesIdentityFour) {
  EXPECT_EQ(mm_stp(DenseMatrix{{1, 1}}, DenseMatrix::identity(4), Side::Left),
            (DenseMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(MmStp, ReducesToOrdinaryProductWhenDimensionsMatch) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5, p = 1 + rng() % 5;
    const auto a = oracle::random_matrix(rng, m, n), b = oracle::random_matrix(rng, n, p);
    EXPECT_EQ(mm_stp(a, b, Side::Left), oracle::matmul(a, b));
    EXPECT_EQ(mm_stp(a, b, Side::Right), oracle::matmul(a, b));
    const auto x = oracle::random_signal(rng, n);
    EXPECT_LE(max_abs_diff(mv_stp(a, x, Side::Left), oracle::as_signal(oracle::matmul(a, oracle::as_col(x)))), kTol);
  }
}

TEST(MmStp, MatchesDefinitionThroughOracle) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 6, p = 1 + rng() % 6, q = 1 + rng() % 4;
    const auto a = oracle::random_matrix(rng, m, n), b = oracle::random_matrix(rng, p, q);
    const std::size_t t = std::lcm(n, p);
    const auto left = oracle::matmul(oracle::kron(a, oracle::eye(t / n)), oracle::kron(b, oracle::eye(t / p)));
    const auto right = oracle::matmul(oracle::kron(oracle::eye(t / n), a), oracle::kron(oracle::eye(t / p), b));
    EXPECT_LE(max_abs_diff(mm_stp(a, b, Side::Left), left), kTol);
    EXPECT_LE(max_abs_diff(mm_stp(a, b, Side::Right), right), kTol);
  }
}

TEST(MmStp, Associative) {
  std::mt19937_64 rng(16);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
      const auto b = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
      const auto c = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
      const auto lhs = mm_stp(mm_stp(a, b, side), c, side);
      const auto rhs = mm_stp(a, mm_stp(b, c, side), side);
      ASSERT_EQ(lhs.rows(), rhs.rows());
      ASSERT_EQ(lhs.cols(), rhs.cols());
      EXPECT_LE(max_abs_diff(lhs, rhs), kTol);
    }
}

TEST(MmStp, MixedAssociativityWithVectors) {
  std::mt19937_64 rng(17);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
      const auto b = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
      const auto x = oracle::random_signal(rng, 1 + rng() % 6);
      const auto lhs = mv_stp(mm_stp(a, b, side), x, side);
      const auto rhs = mv_stp(a, mv_stp(b, x, side), side);
      ASSERT_EQ(lhs.dim(), rhs.dim());
      EXPECT_LE(max_abs_diff(lhs, rhs), kTol);
    }
}

TEST(MmStp, DistributesOverSameShapeSums) {
  std::mt19937_64 rng(18);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 6, p = 1 + rng() % 6, q = 1 + rng() % 4;
      const auto a = oracle::random_matrix(rng, m, n);
      const auto b = oracle::random_matrix(rng, p, q), c = oracle::random_matrix(rng, p, q);
      EXPECT_LE(max_abs_diff(mm_stp(a, b + c, side), mm_stp(a, b, side) + mm_stp(a, c, side)), kTol);
      EXPECT_LE(max_abs_diff(mm_stp(b + c, a, side), mm_stp(b, a, side) + mm_stp(c, a, side)), kTol);
    }
}

TEST(MvStp, WorkedValues) {
  const DenseMatrix a{{1, 1}};
  EXPECT_EQ(mv_stp(a, Signal{1, 2, 3, 4}, Side::Left), (Signal{4, 6}));
  EXPECT_EQ(mv_stp(a, Signal{1, 2, 3, 4}, Side::Right), (Signal{3, 7}));
  EXPECT_EQ(mv_stp(a, Signal{1, 2, 3}, Side::Left), (Signal{3, 4, 5}));
}

TEST(Sta, WorkedValues) {
  EXPECT_EQ(sta(Signal{1, 2}, Signal{1, 2, 3}, Side::Left), (Signal{2, 2, 3, 4, 5, 5}));
  EXPECT_EQ(sta(Signal{1, 2}, Signal{1, 2, 3}, Side::Right), (Signal{2, 4, 4, 3, 3, 5}));
  EXPECT_EQ(sta(Signal{1, 2, 3}, Signal{4, 5, 6}, Side::Left), (Signal{5, 7, 9}));
  const Signal x{3, -1, 2};
  EXPECT_EQ(sta(x, x, Side::Left, true), Signal::zeros(3));
}
