#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "stpcs/basis.hpp"
#include "stpcs/errors.hpp"
#include "stpcs/linalg.hpp"
#include "stpcs/signal_space.hpp"
#include "stpcs/stp.hpp"

using namespace stpcs;

namespace {

std::vector<std::size_t> indices(const std::vector<BasisElement>& layer) {
  std::vector<std::size_t> out;
  for (const auto& e : layer) out.push_back(e.j);
  return out;
}

std::size_t totient(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t j = 1; j <= n; ++j) count += std::gcd(j, n) == 1 ? 1 : 0;
  return count;
}

std::vector<Signal> values(const std::vector<BasisElement>& elems) {
  std::vector<Signal> out;
  for (const auto& e : elems) out.push_back(e.value());
  return out;
}

}  // namespace

TEST(GeneratingLayer, WorkedLayers) {
  EXPECT_EQ(generating_layer(1), (std::vector<BasisElement>{{1, 1}}));
  EXPECT_EQ(indices(generating_layer(6)), (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(indices(generating_layer(12)), (std::vector<std::size_t>{1, 5, 7, 11}));
  EXPECT_EQ(generating_layer(1).front().value(), (Signal{1}));
  EXPECT_EQ(generating_layer(3)[1].value(), (Signal{0, 1, 0}));
}

TEST(SquareDecomposition, MaximalSquare) {
  EXPECT_TRUE(has_multifold_divisor(12));
  EXPECT_FALSE(has_multifold_divisor(6));
  EXPECT_TRUE(has_multifold_divisor(27));
  EXPECT_FALSE(has_multifold_divisor(1));
  const auto d = square_decomposition(72);
  EXPECT_EQ(d.s, 6u);
  EXPECT_EQ(d.q, 2u);
  const auto e = square_decomposition(27);
  EXPECT_EQ(e.s, 3u);
  EXPECT_EQ(e.q, 3u);
}

TEST(BasisLayer, WorkedLayers) {
  EXPECT_EQ(indices(basis_layer(12)), (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(indices(basis_layer(27)), (std::vector<std::size_t>{1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17}));
  EXPECT_EQ(indices(basis_layer(4)), (std::vector<std::size_t>{1}));
}

TEST(BasisLayer, SquarefreeLayersHaveTotientSize) {
  for (std::size_t n = 2; n <= 60; ++n) {
    if (has_multifold_divisor(n)) {
      EXPECT_LT(basis_layer(n).size(), totient(n)) << n;
    } else {
      EXPECT_EQ(basis_layer(n).size(), totient(n)) << n;
    }
  }
}

TEST(BasisUpTo, LeadingElements) {
  EXPECT_EQ(basis_up_to(1), (std::vector<BasisElement>{{1, 1}}));
  const std::vector<BasisElement> five{{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
  EXPECT_EQ(basis_up_to(5), five);
  const auto ten = basis_up_to(10);
  ASSERT_EQ(ten.size(), 27u);
  EXPECT_EQ(ten.back(), (BasisElement{10, 9}));
  EXPECT_EQ(ten[17], (BasisElement{8, 1}));
  EXPECT_EQ(ten[18], (BasisElement{8, 3}));
}

TEST(BasisUpTo, IndependentUnderLeftLift) {
  // Gram matrix of the lifted elements, scaled by 1/lcm; full rank iff independent.
  for (std::size_t m : {5u, 12u, 20u, 30u}) {
    const auto elems = values(basis_up_to(m));
    const auto g = gram_matrix(elems, Side::Left);
    EXPECT_EQ(linalg::rank(g, 1e-9), elems.size()) << m;
    EXPECT_GT(linalg::symmetric_eigenvalues(g).front(), 1e-7) << m;
  }
}

TEST(BasisUpTo, LiftedMatrixHasFullColumnRankForSmallM) {
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto elems = basis_up_to(m);
    std::size_t t = 1;
    for (const auto& e : elems) t = std::lcm(t, e.n);
    DenseMatrix lifted(t, elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c) {
      const auto v = lift(elems[c].value(), t / elems[c].n, Side::Left);
      for (std::size_t r = 0; r < t; ++r) lifted(r, c) = v[r];
    }
    EXPECT_EQ(oracle::rank(lifted), elems.size()) << m;
  }
}

TEST(BasisUpTo, RightLiftBecomesDependentAtSixteen) {
  const auto g15 = gram_matrix(values(basis_up_to(15)), Side::Right);
  EXPECT_EQ(linalg::rank(g15, 1e-9), g15.rows());
  const auto g16 = gram_matrix(values(basis_up_to(16)), Side::Right);
  EXPECT_LT(linalg::rank(g16, 1e-9), g16.rows());
}

TEST(BasisWitness, RemovedElementsAreLifts) {
  const auto d12 = [](std::size_t j) { return Signal::unit(12, j); };
  EXPECT_TRUE(equivalent(sta(d12(1), d12(7), Side::Right), Signal::unit(6, 1), Side::Right));
  EXPECT_TRUE(equivalent(sta(d12(5), d12(11), Side::Right), Signal::unit(6, 5), Side::Right));
  for (std::size_t k = 1; k <= 8; ++k) {
    const Signal sum = Signal::unit(27, k) + Signal::unit(27, k + 9) + Signal::unit(27, k + 18);
    EXPECT_TRUE(equivalent(sum, Signal::unit(9, k), Side::Right)) << k;
  }
}

TEST(OrthonormalBasis, LeadingVectorsMatchTable) {
  const auto b = orthonormal_basis(5);
  ASSERT_EQ(b.count(), 9u);
  const std::vector<std::pair<double, std::vector<double>>> want{
      {1.0, {1}},
      {1.0, {1, -1}},
      {std::sqrt(0.5), {2, -1, -1}},
      {std::sqrt(1.5), {0, 1, -1}},
      {std::sqrt(2.0), {1, 0, -1, 0}},
      {0.5, {4, -1, -1, -1, -1}},
      {std::sqrt(5.0 / 12.0), {0, 3, -1, -1, -1}},
      {std::sqrt(5.0 / 6.0), {0, 0, 2, -1, -1}},
      {std::sqrt(2.5), {0, 0, 0, 1, -1}},
  };
  for (std::size_t i = 0; i < want.size(); ++i) {
    std::vector<double> v = want[i].second;
    for (double& x : v) x *= want[i].first;
    ASSERT_EQ(b.elements[i].dim(), v.size()) << i;
    EXPECT_LE(max_abs_diff(b.elements[i], Signal(v)), 1e-10) << "e" << i + 1;
  }
}

TEST(OrthonormalBasis, IsOrthonormalOnBothSides) {
  for (Side side : {Side::Left, Side::Right}) {
    const auto b = orthonormal_basis(side == Side::Left ? 9 : 15, side);
    for (std::size_t i = 0; i < b.count(); ++i)
      for (std::size_t j = i; j < b.count(); ++j) {
        const double ip = inner_v(b.elements[i], b.elements[j], side);
        EXPECT_NEAR(ip, i == j ? 1.0 : 0.0, 1e-10) << i << "," << j;
      }
  }
}

TEST(OrthonormalBasis, LeadingEntryPositive) {
  const auto b = orthonormal_basis(8);
  for (const auto& e : b.elements) {
    std::size_t i = 0;
    while (std::abs(e[i]) < 1e-12) ++i;
    EXPECT_GT(e[i], 0.0);
  }
}

TEST(OrthonormalBasis, RightSideRejectsDependentInput) {
  try {
    orthonormal_basis(16, Side::Right);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentInput);
  }
}

TEST(OrthonormalBasis, RefusesHugeCommonDimension) {
  for (Side side : {Side::Left, Side::Right}) {
    try {
      orthonormal_basis(17, side);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
  }
}

TEST(Coordinates, WorkedValues) {
  const auto b = orthonormal_basis(5);
  const auto c1 = coordinates(Signal::ones(5), b);
  const auto c2 = coordinates(Signal{1, -1}, b);
  for (std::size_t i = 0; i < b.count(); ++i) {
    EXPECT_NEAR(c1[i], i == 0 ? 1.0 : 0.0, 1e-12);
    EXPECT_NEAR(c2[i], i == 1 ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Coordinates, OutsideSpanThrows) {
  const auto b = orthonormal_basis(5);
  try {
    coordinates(Signal{0, 1, 0, 0}, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientBasis);
  }
}

TEST(Coordinates, SpansSquarefreeSpaces) {
  const auto b = orthonormal_basis(6);
  std::mt19937_64 rng(31);
  for (std::size_t n : {2u, 3u, 5u, 6u}) {
    const auto x = oracle::random_signal(rng, n);
    const auto c = coordinates(x, b);
    EXPECT_LE(dist_v(reconstruct(c, b), x, Side::Right), 1e-9) << n;
  }
}

TEST(Coordinates, InvertReconstruct) {
  std::mt19937_64 rng(32);
  for (Side side : {Side::Left, Side::Right}) {
    const auto b = orthonormal_basis(7, side);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> c(b.count());
      for (double& v : c) v = std::uniform_real_distribution<double>(-1, 1)(rng);
      const Signal x = reconstruct(c, b);
      const auto back = coordinates(x, b);
      EXPECT_LE(dist_v(reconstruct(back, b), x, side), 1e-9);
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(back[i], c[i], 1e-9);
    }
  }
}
