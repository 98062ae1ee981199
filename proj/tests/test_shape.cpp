#include "salem/closed_forms.hpp"
#include "salem/shape.hpp"
#include "salem/table1.hpp"

#include <gtest/gtest.h>

#include <cmath>

using salem::DensityModel;
using salem::IntPolynomial;

namespace {

salem::ShapeReport shape_of(const IntPolynomial& p) { return salem::shape_classify(DensityModel(p)); }

std::vector<double> rounded(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(std::round(x * 100) / 100);
  return out;
}

}  // namespace

TEST(ShapeClassify, CubicOneOneOne) {
  const auto s = shape_of(IntPolynomial{0, 1, 1, 1});
  EXPECT_EQ(rounded(s.A), (std::vector<double>{0, 0.89, 1}));
  EXPECT_EQ(rounded(s.B), (std::vector<double>{0, 0.63, 1}));
  EXPECT_TRUE(s.S.empty());
  EXPECT_EQ(s.shape, "∪⌣∪");
  EXPECT_EQ(s.pieces.size(), s.partition.size() - 1);
}

TEST(ShapeClassify, StationaryInflection) {
  const auto s = shape_of(IntPolynomial{0, 10, 3, 3});
  EXPECT_EQ(rounded(s.S), (std::vector<double>{0.11}));
  EXPECT_EQ(s.shape, "∪∪");
  EXPECT_TRUE(salem::contains(s.asymptotes_left, s.S[0]));
  EXPECT_TRUE(salem::contains(s.asymptotes_right, s.S[0]));
}

TEST(ShapeClassify, NoRealCriticals) {
  const auto s = shape_of(IntPolynomial{0, 4, 1, 1});
  EXPECT_EQ(s.A, (std::vector<double>{0, 1}));
  EXPECT_EQ(s.B, (std::vector<double>{0, 1}));
  EXPECT_EQ(s.shape, "∪");
}

TEST(ShapeClassify, ZeroAndOneAlwaysPresent) {
  for (auto [a3, a2, a1] : {std::tuple{1L, 1L, 1L}, {1L, -2L, -2L}, {1L, 2L, -2L}, {2L, -7L, 5L}, {5L, 1L, -9L}}) {
    const auto s = shape_of(IntPolynomial{0, a1, a2, a3});
    EXPECT_DOUBLE_EQ(s.partition.front(), 0);
    EXPECT_DOUBLE_EQ(s.partition.back(), 1);
    for (const auto* set : {&s.A, &s.B, &s.S})
      EXPECT_EQ(salem::contains(*set, 0), salem::contains(*set, 1));
  }
}

TEST(ShapeClassify, PublishedCubicTable) {
  for (const auto& row : salem::published_shape_table()) {
    const auto got = salem::compute_shape_row(row.a3, row.a2, row.a1);
    EXPECT_EQ(got.shape, row.shape) << row.a3 << "," << row.a2 << "," << row.a1;
    EXPECT_EQ(got.x1, row.x1);
    EXPECT_EQ(got.x2, row.x2);
  }
}

TEST(ShapeClassify, FigureCaptions) {
  EXPECT_EQ(shape_of(IntPolynomial{0, 6, 5, 3}).shape, "⌊∪⌋");
  EXPECT_EQ(shape_of(IntPolynomial{0, -2, -1, 1}).shape, "∪⌋");
}

TEST(QuadraticAsymptoteTest, Cases) {
  auto none = salem::quadratic_asymptote_test(1, 0);
  EXPECT_FALSE(none.v);
  EXPECT_EQ(none.shape, "∪");
  auto up = salem::quadratic_asymptote_test(1, 1);
  ASSERT_TRUE(up.v);
  EXPECT_DOUBLE_EQ(*up.v, 0.25);
  EXPECT_EQ(up.shape, "∪⌣");
  auto down = salem::quadratic_asymptote_test(-1, 1);
  ASSERT_TRUE(down.v);
  EXPECT_DOUBLE_EQ(*down.v, 0.75);
  EXPECT_EQ(down.shape, "⌣∪");
}

TEST(QuadraticAsymptoteTest, AgreesWithClassifier) {
  for (long a2 = -4; a2 <= 4; ++a2) {
    if (a2 == 0) continue;
    for (long a1 = -18; a1 <= 18; ++a1) {
      const auto predicted = salem::quadratic_asymptote_test(a2, a1);
      const auto s = shape_of(IntPolynomial{0, a1, a2});
      EXPECT_EQ(predicted.shape, s.shape) << a2 << "," << a1;
      if (predicted.v) {
        const auto& interior = a2 > 0 ? s.B : s.A;
        EXPECT_TRUE(salem::contains(interior, *predicted.v)) << a2 << "," << a1;
      }
    }
  }
}

TEST(CubicCriticals, ClosedFormMatchesPartition) {
  auto c = salem::cubic_criticals(1, 1, 1);
  ASSERT_TRUE(c);
  EXPECT_NEAR(c->first, (-1 - std::sqrt(7.0)) / 6, 1e-15);
  EXPECT_NEAR(c->second, (-1 + std::sqrt(7.0)) / 6, 1e-15);
  EXPECT_FALSE(salem::cubic_criticals(1, 1, 4));
  c = salem::cubic_criticals(1, 0, 0);
  ASSERT_TRUE(c);
  EXPECT_DOUBLE_EQ(c->first, -0.5);
  EXPECT_DOUBLE_EQ(c->second, 0.5);

  for (long a3 : {1L, 2L, -3L})
    for (long a2 = -5; a2 <= 5; ++a2)
      for (long a1 = -6; a1 <= 6; a1 += 3) {
        const auto closed = salem::cubic_criticals(a3, a2, a1);
        const DensityModel m(IntPolynomial{0, a1, a2, a3});
        std::vector<double> generic;
        for (const auto& cp : m.partition().all)
          for (int r = 0; r < cp.multiplicity; ++r) generic.push_back(cp.x_d());
        if (!closed) {
          EXPECT_TRUE(generic.empty());
          continue;
        }
        ASSERT_EQ(generic.size(), 2u) << a3 << "," << a2 << "," << a1;
        EXPECT_NEAR(generic[0], closed->first, 1e-10);
        EXPECT_NEAR(generic[1], closed->second, 1e-10);
      }
}
