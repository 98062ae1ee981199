#pragma once

#include <vector>

namespace salem {

/// f' for the odd-m binomial polynomial (Q = -2^m x^m):
/// pi^-1 sum_{i=-2^m}^{2^m-1} r / (2m (x+i) sqrt(1 - r^2/4)), r the real
/// m-th root of x + i. Throws AsymptoteError near 0 and 1.
double xm_density_odd(int m, double x);

/// f' for the even-m binomial polynomial:
/// pi^-1 sum_{i=1}^{2^m} r / (m (i-x) sqrt(1 - r^2/4)), r = (i - x)^(1/m).
double xm_density_even(int m, double x);

/// Bessel function J0: ascending series at 256 bits for z <= 20, Hankel
/// asymptotic expansion above.
double bessel_j0(double z);

enum class Smoothing { None, Cesaro };

struct BesselSeriesParams {
  int t = 2;
  int terms = 10000;
  Smoothing smoothing = Smoothing::Cesaro;
};

/// 1 + 2 sum_{k<=K} w_k J0(4 k pi)^(t-1) cos(2 pi k x), the density of
/// {theta^n} for a Salem theta of degree 2t. Coefficients are computed once.
class BesselSeries {
 public:
  explicit BesselSeries(const BesselSeriesParams& params);

  const BesselSeriesParams& params() const { return params_; }
  /// w_k J0(4 k pi)^(t-1), index k-1.
  const std::vector<double>& coefficients() const { return coeffs_; }
  double operator()(double x) const;

 private:
  BesselSeriesParams params_;
  std::vector<double> coeffs_;
};

double bessel_density(const BesselSeriesParams& params, double x);

}  // namespace salem
