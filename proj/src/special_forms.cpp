#include "salem/special_forms.hpp"

#include "salem/big_float.hpp"
#include "salem/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace salem {

namespace {

void check_open_unit(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("x must lie in (0, 1)");
}

long double real_root(long double y, int m) {
  const long double r = std::pow(std::fabs(y), 1.0L / m);
  return y < 0 ? -r : r;
}

}  // namespace

double xm_density_odd(int m, double x) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("xm_density_odd: m must be odd and positive");
  check_open_unit(x);
  if (x < kAsymptoteTolerance) throw AsymptoteError(x, 0.0);
  if (x > 1 - kAsymptoteTolerance) throw AsymptoteError(x, 1.0);
  const long span = 1L << m;
  long double sum = 0;
  for (long i = -span; i <= span - 1; ++i) {
    const long double y = x + i;
    const long double r = real_root(y, m);
    sum += r / (2.0L * m * y * std::sqrt(1.0L - r * r / 4));
  }
  return static_cast<double>(sum / std::numbers::pi_v<long double>);
}

double xm_density_even(int m, double x) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("xm_density_even: m must be even and positive");
  check_open_unit(x);
  if (x > 1 - kAsymptoteTolerance) throw AsymptoteError(x, 1.0);
  if (x < kAsymptoteTolerance) throw AsymptoteError(x, 0.0);
  const long span = 1L << m;
  long double sum = 0;
  for (long i = 1; i <= span; ++i) {
    const long double y = i - x;
    const long double r = std::pow(y, 1.0L / m);
    sum += r / (m * y * std::sqrt(1.0L - r * r / 4));
  }
  return static_cast<double>(sum / std::numbers::pi_v<long double>);
}

namespace {

double j0_series(double z) {
  const mpfr_prec_t prec = 256;
  BigFloat q = BigFloat::from(z, prec);
  mpfr_sqr(q.get(), q.get(), MPFR_RNDN);
  mpfr_div_ui(q.get(), q.get(), 4, MPFR_RNDN);  // z^2 / 4
  BigFloat term = BigFloat::from(1.0, prec);
  BigFloat sum = BigFloat::from(1.0, prec);
  for (unsigned long k = 1; k < 400; ++k) {
    mpfr_mul(term.get(), term.get(), q.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), k * k, MPFR_RNDN);
    mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    if (!mpfr_zero_p(term.get()) && mpfr_get_exp(term.get()) < -120) break;
  }
  return sum.to_double();
}

double j0_hankel(double z) {
  // P ~ sum (-1)^k a_{2k} z^-2k, Q ~ sum (-1)^k a_{2k+1} z^-(2k+1),
  // a_k z^-k = a_{k-1} z^-(k-1) * (2k-1)^2 / (8 k z).
  long double p = 1, q = 0, term = 1;
  for (int k = 1; k < 60; ++k) {
    const long double next = term * (2.0L * k - 1) * (2.0L * k - 1) / (8.0L * k * z);
    if (k > 6 && std::fabs(next) >= std::fabs(term)) break;
    term = next;
    // a_k itself carries (-1)^k
    const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0)
      p += sign * term;
    else
      q -= sign * term;
    if (std::fabs(term) < 1e-22L) break;
  }
  const long double chi = z - std::numbers::pi_v<long double> / 4;
  return static_cast<double>(std::sqrt(2.0L / (std::numbers::pi_v<long double> * z)) *
                             (p * std::cos(chi) - q * std::sin(chi)));
}

}  // namespace

double bessel_j0(double z) {
  if (!(z >= 0)) throw std::invalid_argument("bessel_j0: z must be nonnegative");
  return z <= 20 ? j0_series(z) : j0_hankel(z);
}

BesselSeries::BesselSeries(const BesselSeriesParams& params) : params_(params) {
  if (params.t < 2) throw std::invalid_argument("BesselSeries: t must be at least 2");
  if (params.terms < 1) throw std::invalid_argument("BesselSeries: need at least one term");
  coeffs_.reserve(static_cast<std::size_t>(params.terms));
  for (int k = 1; k <= params.terms; ++k) {
    double c = std::pow(bessel_j0(4.0 * k * std::numbers::pi), params.t - 1);
    if (params.smoothing == Smoothing::Cesaro) c *= 1.0 - static_cast<double>(k) / (params.terms + 1);
    coeffs_.push_back(c);
  }
}

double BesselSeries::operator()(double x) const {
  long double sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    sum += coeffs_[k] * std::cos(2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k + 1) * x);
  return static_cast<double>(1.0L + 2.0L * sum);
}

double bessel_density(const BesselSeriesParams& params, double x) { return BesselSeries(params)(x); }

}  // namespace salem
