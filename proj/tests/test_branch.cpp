#include "salem/branch.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using salem::IntPolynomial;

namespace {

salem::QForm cubic(long a3, long a2, long a1) { return salem::build_q(IntPolynomial{0, a1, a2, a3}); }

}  // namespace

TEST(CriticalPartition, Linear) {
  const auto part = salem::critical_partition(salem::build_q(IntPolynomial{0, 1}));
  EXPECT_EQ(part.branch_count(), 1);
  EXPECT_TRUE(part.turning.empty());
}

TEST(CriticalPartition, CubicOneOneOne) {
  const auto part = salem::critical_partition(cubic(1, 1, 1));
  ASSERT_EQ(part.branch_count(), 3);
  EXPECT_NEAR(part.points[1].get_d(), (-1 - std::sqrt(7.0)) / 6, 1e-15);
  EXPECT_NEAR(part.points[2].get_d(), (-1 + std::sqrt(7.0)) / 6, 1e-15);
}

TEST(CriticalPartition, DoubleRootDoesNotSplit) {
  const auto part = salem::critical_partition(cubic(3, 3, 10));
  EXPECT_EQ(part.branch_count(), 1);
  ASSERT_EQ(part.stationary.size(), 1u);
  EXPECT_EQ(part.stationary[0].x, mpq_class(-1, 6));
  EXPECT_EQ(part.stationary[0].multiplicity, 2);
  EXPECT_NEAR(part.stationary[0].value_d(), 6.11, 0.005);
}

TEST(CriticalPartition, RootsOutsideIntervalIgnored) {
  // (1, -2, -2): roots -0.39 and 1.06, only the first splits [-1, 1]
  const auto part = salem::critical_partition(cubic(1, -2, -2));
  EXPECT_EQ(part.branch_count(), 2);
  EXPECT_EQ(part.all.size(), 2u);
}

TEST(Branches, LinearIsOneDecreasingBranch) {
  const auto b = salem::branches(salem::build_q(IntPolynomial{0, 1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_FALSE(b[0].increasing);
  EXPECT_EQ(b[0].alpha, -2);
  EXPECT_EQ(b[0].beta, 2);
}

TEST(Branches, SquareHasTwoBranches) {
  const auto q = salem::build_q(IntPolynomial{0, 0, 1});
  const auto b = salem::branches(q);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(b[0].increasing);
  EXPECT_EQ(b[0].x_lo, -1);
  EXPECT_EQ(b[0].x_hi, 0);
  EXPECT_EQ(b[0].alpha, q.exact(-1));
  EXPECT_EQ(b[0].beta, q.exact(0));
  EXPECT_EQ(b[0].alpha, -2);
  EXPECT_EQ(b[0].beta, 2);
  EXPECT_FALSE(b[1].increasing);
  EXPECT_EQ(b[1].alpha, -2);
  EXPECT_EQ(b[1].beta, 2);
}

TEST(Branches, CubicCriticalValues) {
  const auto b = salem::branches(cubic(1, 1, 1));
  ASSERT_EQ(b.size(), 3u);
  EXPECT_NEAR(b[0].alpha_d(), -0.11, 0.005);
  EXPECT_NEAR(b[1].beta_d(), 2.63, 0.005);
}

TEST(Branches, TilingAndMonotone) {
  for (auto [a3, a2, a1] : {std::tuple{1L, 1L, 1L}, {3L, 5L, 6L}, {1L, -1L, -2L}, {2L, 0L, 9L}, {1L, 0L, 0L}}) {
    const auto q = cubic(a3, a2, a1);
    const auto bs = salem::branches(q);
    mpq_class covered = 0;
    for (const auto& b : bs) {
      covered += b.x_hi - b.x_lo;
      EXPECT_EQ(b.increasing, q.exact(b.x_lo) == b.alpha);
      EXPECT_LT(b.alpha, b.beta);
      long double prev = q(b.lo());
      for (int k = 1; k <= 10; ++k) {
        const long double x = b.lo() + (b.hi() - b.lo()) * k / 11.0L;
        const long double v = q(x);
        EXPECT_TRUE(b.increasing ? v > prev : v < prev);
        prev = v;
      }
    }
    EXPECT_EQ(covered, 2);
    EXPECT_EQ(q.exact(1).get_den(), 1);
    EXPECT_EQ(q.exact(-1).get_den(), 1);
  }
}

TEST(InvertOnBranch, Linear) {
  const auto q = salem::build_q(IntPolynomial{0, 1});
  const auto b = salem::branches(q)[0];
  EXPECT_DOUBLE_EQ(salem::invert_on_branch(b, q, 1.0), -0.5);
  EXPECT_THROW(salem::invert_on_branch(b, q, 2.5), salem::OutOfRangeError);
}

TEST(InvertOnBranch, QuadraticClosedForm) {
  for (auto [a2, a1] : {std::pair{1L, 1L}, {2L, 3L}, {-1L, 2L}, {1L, 0L}}) {
    const auto q = salem::build_q(IntPolynomial{0, a1, a2});
    for (const auto& b : salem::branches(q)) {
      for (int k = 1; k < 20; ++k) {
        const double y = b.alpha_d() + (b.beta_d() - b.alpha_d()) * k / 20.0;
        const double d = std::sqrt(double(a1 * a1 + 8 * a2 * a2) - 4.0 * a2 * y);
        const double r1 = -(a1 + d) / (4.0 * a2), r2 = -(a1 - d) / (4.0 * a2);
        const double x = salem::invert_on_branch(b, q, y);
        const double closest = std::fabs(x - r1) < std::fabs(x - r2) ? r1 : r2;
        EXPECT_NEAR(x, closest, 1e-12);
        EXPECT_GE(closest, b.lo() - 1e-15);
        EXPECT_LE(closest, b.hi() + 1e-15);
      }
    }
  }
}

TEST(InvertOnBranch, RoundTripAndResidual) {
  std::mt19937_64 rng(5);
  for (auto [a3, a2, a1] : {std::tuple{1L, 1L, 1L}, {3L, 5L, 6L}, {3L, 3L, 10L}, {1L, 2L, 3L}}) {
    const auto q = cubic(a3, a2, a1);
    for (const auto& b : salem::branches(q)) {
      const double mid = 0.5 * (b.lo() + b.hi());
      EXPECT_NEAR(salem::invert_on_branch(b, q, static_cast<double>(q(mid))), mid, 1e-12);
      std::uniform_real_distribution<double> ys(b.alpha_d(), b.beta_d());
      const double scale = std::max({1.0, std::fabs(b.alpha_d()), std::fabs(b.beta_d())});
      for (int k = 0; k < 100; ++k) {
        const double y = ys(rng);
        const double x = salem::invert_on_branch(b, q, y);
        EXPECT_LE(std::fabs(static_cast<double>(q(x)) - y), 1e-12 * scale);
      }
    }
  }
}

TEST(SK, ClampsAndSigns) {
  const auto lin = salem::build_q(IntPolynomial{0, 1});
  const auto b = salem::branches(lin)[0];
  EXPECT_DOUBLE_EQ(salem::s_k(b, lin, 10), -1);
  EXPECT_DOUBLE_EQ(salem::s_k(b, lin, -10), 1);

  const auto sq = salem::build_q(IntPolynomial{0, 0, 1});
  const auto up = salem::branches(sq)[0];
  ASSERT_TRUE(up.increasing);
  EXPECT_DOUBLE_EQ(salem::s_k(up, sq, 2), 0);
  EXPECT_DOUBLE_EQ(salem::s_k(up, sq, -2), 1);
  for (double y : {-1.5, 0.0, 1.0}) EXPECT_NEAR(salem::s_k(up, sq, y), std::sqrt((2 - y) / 4), 1e-14);
}

TEST(SK, RangeIsUnitInterval) {
  const auto q = cubic(3, 5, 6);
  for (const auto& b : salem::branches(q))
    for (double y = -1000; y <= 1000; y += 0.37) {
      const double s = salem::s_k(b, q, y);
      EXPECT_GE(s, -1);
      EXPECT_LE(s, 1);
    }
}
