#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "stpcs/errors.hpp"
#include "stpcs/signal_space.hpp"
#include "stpcs/stp.hpp"

using namespace stpcs;

namespace {

constexpr double kTol = 1e-12;

void expect_near(const Signal& got, const Signal& want, double tol) {
  ASSERT_EQ(got.dim(), want.dim());
  EXPECT_LE(max_abs_diff(got, want), tol);
}

}  // namespace

TEST(ReduceSignal, FindsLargestRepeat) {
  const auto r = reduce_signal(Signal{1, 1, 2, 2, 3, 3}, Side::Left);
  EXPECT_EQ(r.atom, (Signal{1, 2, 3}));
  EXPECT_EQ(r.multiplicity, 2u);
  const auto rr = reduce_signal(Signal{1, 2, 3, 1, 2, 3}, Side::Right);
  EXPECT_EQ(rr.atom, (Signal{1, 2, 3}));
  EXPECT_EQ(rr.multiplicity, 2u);
  EXPECT_EQ(reduce_signal(Signal{1, 2, 3, 1, 2, 3}, Side::Left).multiplicity, 1u);
}

TEST(ReduceSignal, IrreducibleInputIsItsOwnAtom) {
  const auto r = reduce_signal(Signal{1, 2, 3}, Side::Left);
  EXPECT_EQ(r.atom, (Signal{1, 2, 3}));
  EXPECT_EQ(r.multiplicity, 1u);
}

TEST(ReduceSignal, ConstantAndZeroVectorsCollapseToScalars) {
  const auto c = reduce_signal(Signal{2.5, 2.5, 2.5, 2.5}, Side::Left);
  EXPECT_EQ(c.atom, (Signal{2.5}));
  EXPECT_EQ(c.multiplicity, 4u);
  const auto z = reduce_signal(Signal::zeros(6), Side::Right);
  EXPECT_EQ(z.atom, (Signal{0}));
  EXPECT_EQ(z.multiplicity, 6u);
}

TEST(ReduceSignal, IdempotentAndInvertsLifts) {
  std::mt19937_64 rng(21);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_int_signal(rng, 1 + rng() % 6);
      const auto atom = reduce_signal(x, side).atom;
      EXPECT_EQ(reduce_signal(atom, side).multiplicity, 1u);
      const std::size_t f = 1 + rng() % 4;
      const auto lifted = reduce_signal(oracle::lift(x, f, side), side);
      EXPECT_EQ(lifted.atom, atom);
    }
}

TEST(ReduceMatrix, UndoesKroneckerLift) {
  const DenseMatrix a{{1, 2, 0}, {0, 1, 3}};
  const auto r = reduce_matrix(oracle::kron(a, oracle::eye(3)), Side::Left);
  EXPECT_EQ(r.atom, a);
  EXPECT_EQ(r.multiplicity, 3u);
  const auto rr = reduce_matrix(oracle::kron(oracle::eye(2), a), Side::Right);
  EXPECT_EQ(rr.atom, a);
  EXPECT_EQ(rr.multiplicity, 2u);
}

TEST(ReduceMatrix, IdentityReducesToOne) {
  const auto r = reduce_matrix(DenseMatrix::identity(4), Side::Left);
  EXPECT_EQ(r.atom, DenseMatrix::identity(1));
  EXPECT_EQ(r.multiplicity, 4u);
}

TEST(ReduceMatrix, RandomAtomsRoundTrip) {
  std::mt19937_64 rng(22);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_int_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
      const auto atom = reduce_matrix(a, side).atom;
      const std::size_t s = 2 + rng() % 2;
      const auto r = reduce_matrix(lift(atom, s, side), side);
      EXPECT_EQ(r.atom, atom);
      EXPECT_EQ(r.multiplicity % s, 0u);
    }
}

TEST(ReduceMatrix, OddCoprimeShapeIsIrreducible) {
  const DenseMatrix a{{1, 2, 3}};
  EXPECT_EQ(reduce_matrix(a, Side::Left).multiplicity, 1u);
}

TEST(Equivalent, WorkedCases) {
  const Signal x{1, -2, 4};
  EXPECT_TRUE(equivalent(x, lift(x, 3, Side::Left), Side::Left));
  EXPECT_FALSE(equivalent(Signal{1, 2}, Signal{1, 2, 3}, Side::Left));
  EXPECT_TRUE(equivalent(Signal{1, 1}, Signal{1, 1, 1}, Side::Left));
  EXPECT_FALSE(equivalent(x, lift(x, 2, Side::Right), Side::Left));
}

TEST(Equivalent, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = oracle::random_int_signal(rng, 1 + rng() % 4, -1, 1);
    const auto y = lift(x, 1 + rng() % 3, Side::Left);
    const auto z = lift(x, 1 + rng() % 3, Side::Left);
    EXPECT_TRUE(equivalent(x, x, Side::Left));
    EXPECT_EQ(equivalent(x, y, Side::Left), equivalent(y, x, Side::Left));
    EXPECT_TRUE(equivalent(y, z, Side::Left));
  }
}

TEST(StaProperty, RespectsEquivalence) {
  std::mt19937_64 rng(24);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_int_signal(rng, 1 + rng() % 5);
      const auto y = oracle::random_int_signal(rng, 1 + rng() % 5);
      const auto x2 = lift(x, 1 + rng() % 3, side), y2 = lift(y, 1 + rng() % 3, side);
      EXPECT_TRUE(equivalent(sta(x, y, side), sta(x2, y2, side), side));
    }
}

TEST(InnerV, WorkedValues) {
  EXPECT_NEAR(inner_v(Signal::ones(2), Signal::ones(3)), 1.0, kTol);
  EXPECT_NEAR(inner_v(Signal{1, 0}, Signal{0, 1, 0}), 1.0 / 6.0, kTol);
  EXPECT_NEAR(inner_v(Signal{1, 0}, Signal{0, 1, 0}, Side::Right), 1.0 / 6.0, kTol);
}

TEST(InnerV, MatchesMaterializedLifts) {
  std::mt19937_64 rng(25);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_signal(rng, 1 + rng() % 8);
      const auto y = oracle::random_signal(rng, 1 + rng() % 8);
      EXPECT_NEAR(inner_v(x, y, side), oracle::inner_v(x, y, side), kTol);
    }
}

TEST(NormV, WorkedValues) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_NEAR(norm_v(Signal::ones(n)), 1.0, kTol);
  EXPECT_NEAR(norm_v(Signal{2, -1, -1}), std::sqrt(2.0), kTol);
  EXPECT_EQ(norm_v(Signal::zeros(3)), 0.0);
}

TEST(DistV, WorkedValues) {
  const Signal x{3, -1, 2};
  EXPECT_EQ(dist_v(x, lift(x, 2, Side::Left)), 0.0);
  EXPECT_NEAR(dist_v(Signal{1, 0}, Signal{0, 1}), 1.0, kTol);
}

TEST(AngleV, WorkedValues) {
  const Signal x{1, 2, -1};
  EXPECT_NEAR(angle_v(x, 2.0 * x), 0.0, 1e-7);
  EXPECT_NEAR(angle_v(Signal{1, 0}, Signal{0, 1, 0}), std::acos(1.0 / std::sqrt(6.0)), kTol);
  EXPECT_NEAR(angle_v(Signal{1, 0}, Signal{0, 1, 0}), 1.150261991, 1e-9);
}

TEST(AngleV, ZeroVectorThrows) {
  try {
    angle_v(Signal::zeros(2), Signal{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(AngleV, ParallelVectorsNeverNan) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = oracle::random_signal(rng, 1 + rng() % 8);
    const double a = angle_v(x, lift(x, 1 + rng() % 4, Side::Left));
    EXPECT_FALSE(std::isnan(a));
    EXPECT_NEAR(a, 0.0, 1e-6);
  }
}

TEST(Geometry, InvariantUnderLifts) {
  std::mt19937_64 rng(27);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_signal(rng, 1 + rng() % 6);
      const auto y = oracle::random_signal(rng, 1 + rng() % 6);
      const auto lx = lift(x, 1 + rng() % 4, side), ly = lift(y, 1 + rng() % 4, side);
      EXPECT_NEAR(inner_v(lx, ly, side), inner_v(x, y, side), kTol);
      EXPECT_NEAR(norm_v(lx), norm_v(x), kTol);
      EXPECT_NEAR(dist_v(lx, ly, side), dist_v(x, y, side), kTol);
    }
}

TEST(Projection, WorkedMatrices) {
  EXPECT_EQ(projection_matrix(3, 3), DenseMatrix::identity(3));
  const auto p = projection_matrix(2, 3);
  EXPECT_LE(max_abs_diff(p, DenseMatrix{{1, 0}, {0.5, 0.5}, {0, 1}}), kTol);
  const auto mean = projection_matrix(4, 1);
  EXPECT_LE(max_abs_diff(mean, DenseMatrix{{0.25, 0.25, 0.25, 0.25}}), kTol);
  const Signal x{1, 2, 3, 4};
  expect_near(project(x, 2), Signal{1.5, 3.5}, kTol);
  expect_near(project(x, 4), x, kTol);
}

TEST(Projection, MatchesNormalEquationOracle) {
  std::mt19937_64 rng(28);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_signal(rng, 1 + rng() % 8);
      const std::size_t n = 1 + rng() % 8;
      expect_near(project(x, n, side), oracle::project(x, n, side), 1e-10);
    }
}

TEST(Projection, ResidualIsOrthogonalToTarget) {
  std::mt19937_64 rng(29);
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = oracle::random_signal(rng, 1 + rng() % 8);
      const std::size_t n = 1 + rng() % 8;
      const auto residual = sta(x, project(x, n, side), side, true);
      for (std::size_t i = 1; i <= n; ++i) EXPECT_LE(std::abs(inner_v(residual, Signal::unit(n, i), side)), 1e-10);
    }
}

TEST(Projection, IsStationaryPointOfDistance) {
  std::mt19937_64 rng(30);
  const double h = 1e-6;
  for (Side side : {Side::Left, Side::Right})
    for (int trial = 0; trial < 30; ++trial) {
      const auto x = oracle::random_signal(rng, 1 + rng() % 8);
      const std::size_t n = 1 + rng() % 8;
      const auto y = project(x, n, side);
      for (std::size_t i = 0; i < n; ++i) {
        Signal up = y, down = y;
        up[i] += h;
        down[i] -= h;
        const double du = dist_v(up, x, side), dd = dist_v(down, x, side);
        EXPECT_LE(std::abs((du * du - dd * dd) / (2 * h)), 1e-5);
      }
    }
}

TEST(Projection, WorkedRightSideValue) {
  // J_2⊗(a,b) against (1,2,3,4) averages entries 1,3 and 2,4.
  expect_near(project(Signal{1, 2, 3, 4}, 2, Side::Right), Signal{2, 3}, kTol);
}
