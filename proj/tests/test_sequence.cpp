#include "salem/histogram.hpp"
#include "salem/sequence.hpp"

#include <gtest/gtest.h>

#include <cmath>

using salem::IntPolynomial;

namespace {

const salem::SalemNumber& quartic() {
  static const auto s = salem::load_salem_fixture("quartic.poly");
  return s;
}

const salem::SalemNumber& sextic() {
  static const auto s = salem::load_salem_fixture("sextic.poly");
  return s;
}

}  // namespace

TEST(SequenceExact, FirstTermIsFractionalPartOfTheta) {
  const auto run = salem::sequence_exact(quartic(), IntPolynomial{0, 1}, 3);
  const auto fine = salem::refine_theta(quartic(), 128);
  EXPECT_NEAR(run.values[0], salem::fractional_part(fine.theta()), 1e-15);
  EXPECT_NEAR(run.values[0], 0.72208380573904, 1e-13);
  // theta^2 = 2.96557...
  EXPECT_NEAR(run.values[1], std::fmod(std::pow(1.7220838057390422, 2), 1.0), 1e-12);
}

TEST(SequenceExact, ValuesInUnitIntervalAndPrecisionGrows) {
  const auto run = salem::sequence_exact(quartic(), IntPolynomial{7, -3, 2}, 3000);
  ASSERT_EQ(run.values.size(), 3000u);
  for (double v : run.values) {
    EXPECT_GE(v, 0);
    EXPECT_LT(v, 1);
  }
  ASSERT_EQ(run.precision_log.size(), 3u);
  EXPECT_LT(run.precision_log[0], run.precision_log[2]);
  // 3000 * 2 * log2(theta) integer bits must fit
  EXPECT_GT(run.precision_log[2], static_cast<long>(3000 * 2 * std::log2(1.7220838)) + 50);
}

TEST(SequenceExact, PrecisionCap) {
  EXPECT_THROW(salem::sequence_exact(quartic(), IntPolynomial{0, 1}, 10000, 4096), salem::PrecisionCapError);
  EXPECT_THROW(salem::sequence_exact(quartic(), IntPolynomial{0, 1}, 0), std::invalid_argument);
}

TEST(SequenceConjugate, AgreesWithExactPath) {
  for (const auto& p : {IntPolynomial{0, 1}, IntPolynomial{0, 1, 1, 1}, IntPolynomial{0, 6, 5, 3}}) {
    const auto exact = salem::sequence_exact(quartic(), p, 2000);
    const auto conj = salem::sequence_conjugate(quartic(), p, 2000);
    EXPECT_LT(salem::max_circular_distance(exact.values, conj.values), 1e-9) << p.to_string();
  }
}

TEST(SequenceConjugate, DegreeSixAgreesWithExactPath) {
  const IntPolynomial p{0, -2, -1, 1};
  const auto exact = salem::sequence_exact(sextic(), p, 1500);
  const auto conj = salem::sequence_conjugate(sextic(), p, 1500);
  EXPECT_LT(salem::max_circular_distance(exact.values, conj.values), 1e-9);
}

TEST(SequenceConjugate, TrigDriverForLargeN) {
  // For large n theta^-n vanishes and the value is frac(-2 a1 cos 2 pi n omega).
  const auto run = salem::sequence_conjugate(quartic(), IntPolynomial{0, 1}, 200);
  const double omega = quartic().omegas()[0].to_double();
  const double x = -2 * std::cos(2 * M_PI * 200 * omega);
  EXPECT_NEAR(salem::circular_distance(run.values[199], x - std::floor(x)), 0, 1e-10);
}

TEST(CircularDistance, WrapsAround) {
  EXPECT_NEAR(salem::circular_distance(0.999999, 0.000001), 2e-6, 1e-15);
  EXPECT_NEAR(salem::circular_distance(0.25, 0.75), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(salem::circular_distance(0.3, 0.3), 0);
}

TEST(Histogram, PointMass) {
  const std::vector<double> values(1000, 0.5);
  const auto h = salem::histogram(values, 2);
  EXPECT_EQ(h.counts, (std::vector<long>{0, 1000}));
  EXPECT_EQ(h.normalized, (std::vector<double>{0, 2}));
}

TEST(Histogram, HalfOpenBinsAndMass) {
  const auto h = salem::histogram(std::vector<double>{0.0, 0.25, 0.5, 0.999}, 4);
  EXPECT_EQ(h.counts, (std::vector<long>{1, 1, 1, 1}));
  EXPECT_THROW(salem::histogram(std::vector<double>{1.0}, 4), std::domain_error);
  EXPECT_THROW(salem::histogram(std::vector<double>{0.5}, 1), std::invalid_argument);
}

TEST(Histogram, UniformLimit) {
  for (long n : {1000L, 100000L}) {
    std::vector<double> values;
    for (long k = 0; k < n; ++k) values.push_back((k + 0.5) / n);
    const auto h = salem::histogram(values, 50);
    long total = 0;
    double mass = 0;
    for (int i = 0; i < 50; ++i) {
      total += h.counts[i];
      mass += h.normalized[i];
      EXPECT_NEAR(h.normalized[i], 1, 1e-12);
    }
    EXPECT_EQ(total, n);
    EXPECT_NEAR(mass / 50, 1, 1e-12);
  }
}

TEST(Compare, SelfComparisonHasTinyKs) {
  const salem::DensityModel model(IntPolynomial{0, 1, 1, 1});
  const auto sample = salem::inverse_transform_sample(model, 4000);
  // quantiles at (k + 1/2) / N put the empirical CDF within 1 / (2N) of f
  EXPECT_LE(salem::ks_over_edges(sample, 50, model), 0.5 / 4000 + 1e-9);
}

TEST(Compare, DegreeMismatch) {
  const auto run = salem::sequence_conjugate(sextic(), IntPolynomial{0, 1}, 100);
  const salem::DensityModel model(IntPolynomial{0, 1});
  EXPECT_THROW(salem::compare(run, model, 10), salem::DegreeMismatchError);
}

TEST(Compare, LinearRunConverges) {
  const salem::DensityModel model(IntPolynomial{0, 1});
  const auto run = salem::sequence_conjugate(quartic(), IntPolynomial{0, 1}, 200000);
  const auto cmp = salem::compare(run, model, 50);
  EXPECT_LT(cmp.ks_distance, 0.02);
  ASSERT_TRUE(cmp.ks_prefix);
  EXPECT_TRUE(cmp.converging);
  EXPECT_LT(cmp.max_bin_error, 0.05);
  // bins 0 and 49 hold the asymptotes at 0 and 1
  EXPECT_EQ(cmp.histogram.excluded_bins, (std::vector<int>{0, 49}));
}

TEST(Compare, CubicSilhouette) {
  const salem::DensityModel model(IntPolynomial{0, 1, 1, 1});
  const auto run = salem::sequence_conjugate(quartic(), IntPolynomial{0, 1, 1, 1}, 200000);
  const auto h = salem::histogram(run, 50, &model);
  // interior asymptotes at 0.63 (bin 31) and 0.89 (bin 44); the trough is near 0.3 and 0.76
  EXPECT_GT(h.normalized[0], h.normalized[15]);
  EXPECT_GT(h.normalized[31], h.normalized[15]);
  EXPECT_GT(h.normalized[31], h.normalized[38]);
  EXPECT_GT(h.normalized[44], h.normalized[38]);
  EXPECT_GT(h.normalized[49], h.normalized[15]);
}
