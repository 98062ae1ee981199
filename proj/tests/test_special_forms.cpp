#include "salem/chebyshev.hpp"
#include "salem/closed_forms.hpp"
#include "salem/density.hpp"
#include "salem/special_forms.hpp"

#include <mpfr.h>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using salem::DensityModel;

namespace {

double mpfr_reference_j0(double z) {
  mpfr_t v;
  mpfr_init2(v, 200);
  mpfr_set_d(v, z, MPFR_RNDN);
  mpfr_j0(v, v, MPFR_RNDN);
  const double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return out;
}

}  // namespace

TEST(XmDensity, OddOneIsDupain) {
  for (int k = 1; k < 100; ++k) EXPECT_NEAR(salem::xm_density_odd(1, k / 100.0), salem::dupain_density(1, k / 100.0), 1e-13);
}

TEST(XmDensity, OddThreeMatchesGenericPath) {
  const DensityModel m(salem::binomial_poly(3));
  int checked = 0;
  for (int k = 1; k <= 97; ++k) {
    const double x = k / 100.0;
    if (m.asymptote_distance(x) < 1e-3) continue;
    EXPECT_NEAR(salem::xm_density_odd(3, x), m.density(x), 1e-8) << x;
    ++checked;
  }
  EXPECT_EQ(checked, 97);
}

TEST(XmDensity, OddSymmetry) {
  for (int m : {1, 3, 5})
    for (double x : {0.1, 0.2, 0.3, 0.4})
      EXPECT_NEAR(salem::xm_density_odd(m, 0.5 + x), salem::xm_density_odd(m, 0.5 - x), 1e-10) << m << " " << x;
}

TEST(XmDensity, EvenMatchesGenericPath) {
  for (int m : {2, 4}) {
    const DensityModel model(salem::binomial_poly(m));
    EXPECT_EQ(model.asymptotes().all(), (std::vector<double>{0.0, 1.0}));
    for (int k = 1; k < 100; ++k) {
      const double x = k / 100.0;
      EXPECT_TRUE(std::isfinite(salem::xm_density_even(m, x)));
      EXPECT_NEAR(salem::xm_density_even(m, x), model.density(x), 1e-8) << m << " " << x;
    }
  }
}

TEST(XmDensity, EvenSymmetryOnlyForSquare) {
  // -4 cos^2 t = -2 - 2 cos 2t, so m = 2 is a shifted Dupain case; m = 4 is not symmetric.
  double square = 0, fourth = 0;
  for (double x : {0.1, 0.2, 0.3, 0.4}) {
    square = std::max(square, std::fabs(salem::xm_density_even(2, 0.5 + x) - salem::xm_density_even(2, 0.5 - x)));
    fourth = std::max(fourth, std::fabs(salem::xm_density_even(4, 0.5 + x) - salem::xm_density_even(4, 0.5 - x)));
  }
  EXPECT_LT(square, 1e-12);
  EXPECT_GT(fourth, 1e-3);
}

TEST(XmDensity, Errors) {
  EXPECT_THROW(salem::xm_density_odd(2, 0.5), std::invalid_argument);
  EXPECT_THROW(salem::xm_density_even(3, 0.5), std::invalid_argument);
  EXPECT_THROW(salem::xm_density_odd(3, 1e-9), salem::AsymptoteError);
  EXPECT_THROW(salem::xm_density_odd(3, 1.5), salem::DomainError);
}

TEST(BesselJ0, KnownValues) {
  EXPECT_DOUBLE_EQ(salem::bessel_j0(0), 1);
  EXPECT_NEAR(salem::bessel_j0(2.404825557695773), 0, 1e-10);
  EXPECT_LT(salem::bessel_j0(2.40), 0.01);
  EXPECT_LT(salem::bessel_j0(2.40) * salem::bessel_j0(2.41), 0);
  EXPECT_THROW(salem::bessel_j0(-1), std::invalid_argument);
}

TEST(BesselJ0, AgainstReferences) {
  for (double z = 0; z < 200; z += 0.173) {
    EXPECT_NEAR(salem::bessel_j0(z), mpfr_reference_j0(z), 1e-12) << z;
    EXPECT_NEAR(salem::bessel_j0(z), std::cyl_bessel_j(0.0, z), 1e-12) << z;
  }
  for (int k = 1; k <= 2000; k += 37) {
    const double z = 4 * k * std::numbers::pi;
    EXPECT_NEAR(salem::bessel_j0(z), mpfr_reference_j0(z), 1e-12) << z;
  }
}

TEST(BesselJ0, LeadingAsymptotic) {
  const double z = 4 * std::numbers::pi;
  const double leading = std::sqrt(2 / (std::numbers::pi * z)) * std::cos(z - std::numbers::pi / 4);
  // first neglected term of the expansion is 1/(8z) relative
  EXPECT_NEAR(salem::bessel_j0(z), leading, std::sqrt(2 / (std::numbers::pi * z)) / (8 * z) * 1.1);
}

TEST(BesselSeries, LargeTIsNearlyUniform) {
  const salem::BesselSeries series({10, 200, salem::Smoothing::None});
  for (int k = 1; k < 20; ++k) EXPECT_NEAR(series(k / 20.0), 1, 0.01);
}

TEST(BesselSeries, CesaroApproachesDupain) {
  const salem::BesselSeries series({2, 10000, salem::Smoothing::Cesaro});
  for (int k = 10; k <= 90; ++k) EXPECT_NEAR(series(k / 100.0), salem::dupain_density(1, k / 100.0), 0.01);
}

TEST(BesselSeries, Parity) {
  for (int t : {2, 3, 5}) {
    const salem::BesselSeries series({t, 500, salem::Smoothing::Cesaro});
    for (int k = 1; k < 50; ++k) EXPECT_NEAR(series(k / 100.0), series(1 - k / 100.0), 1e-12);
  }
}

TEST(BesselSeries, IntegratesToOne) {
  const salem::BesselSeries series({3, 50, salem::Smoothing::None});
  // trapezoid on a periodic integrand is exact for trigonometric polynomials of lower degree
  const int n = 400;
  double sum = 0;
  for (int k = 0; k < n; ++k) sum += series(static_cast<double>(k) / n);
  EXPECT_NEAR(sum / n, 1, 1e-12);
}

TEST(BesselSeries, CoefficientDecay) {
  for (int t : {2, 3, 4}) {
    const salem::BesselSeries series({t, 100, salem::Smoothing::None});
    for (int k = 1; k <= 100; ++k) {
      // |J0(z)| <= sqrt(2 / (pi z)) asymptotically, z = 4 k pi
      const double bound = std::pow(1.0 / (std::numbers::pi * std::sqrt(2.0 * k)), t - 1);
      EXPECT_LE(std::fabs(series.coefficients()[k - 1]), bound * 1.01) << t << " " << k;
    }
  }
  EXPECT_THROW(salem::BesselSeries({1, 10, salem::Smoothing::None}), std::invalid_argument);
}
