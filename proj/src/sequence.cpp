#include "salem/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace salem {

std::string_view to_string(Method m) { return m == Method::Exact ? "exact" : "conjugate"; }

Method parse_method(std::string_view text) {
  if (text == "exact") return Method::Exact;
  if (text == "conjugate") return Method::Conjugate;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected exact or conjugate)");
}

namespace {

constexpr long kSegment = 1024;
constexpr long kGuardBits = 64;

void check_inputs(const IntPolynomial& p, long n_max) {
  if (n_max < 1) throw std::invalid_argument("sequence: n_max must be at least 1");
  if (p.is_zero()) throw std::invalid_argument("sequence: P is zero");
}

long bits_for(long n, int m, double log2_theta) {
  const long integer_bits = static_cast<long>(std::ceil(n * std::max(m, 1) * log2_theta));
  const long growth = static_cast<long>(std::ceil(std::log2(static_cast<double>(n) * std::max(m, 1) + 1)));
  return integer_bits + kGuardBits + 2 * growth + 16;
}

}  // namespace

SequenceRun sequence_exact(const SalemNumber& s, const IntPolynomial& p, long n_max, long cap) {
  check_inputs(p, n_max);
  SequenceRun run{s, p, n_max, Method::Exact, {}, {}};
  run.values.reserve(static_cast<std::size_t>(n_max));
  const int m = p.degree();
  const double log2_theta = std::log2(s.theta().to_double());
  if (bits_for(n_max, m, log2_theta) > cap)
    throw PrecisionCapError("exact path needs " + std::to_string(bits_for(n_max, m, log2_theta)) +
                            " bits, above the cap of " + std::to_string(cap));

  for (long start = 1; start <= n_max; start += kSegment) {
    const long stop = std::min(n_max, start + kSegment - 1);
    const long prec = bits_for(stop, m, log2_theta);
    run.precision_log.push_back(prec);
    BigFloat theta = s.theta_with_bits(prec);
    mpfr_prec_round(theta.get(), prec, MPFR_RNDN);
    BigFloat power(prec), value(prec);
    mpfr_pow_ui(power.get(), theta.get(), static_cast<unsigned long>(start), MPFR_RNDN);
    for (long n = start; n <= stop; ++n) {
      if (n > start) mpfr_mul(power.get(), power.get(), theta.get(), MPFR_RNDN);
      mpfr_set_zero(value.get(), 1);
      const auto& c = p.coeffs();
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        mpfr_mul(value.get(), value.get(), power.get(), MPFR_RNDN);
        mpfr_add_z(value.get(), value.get(), it->get_mpz_t(), MPFR_RNDN);
      }
      run.values.push_back(fractional_part(value));
    }
  }
  return run;
}

SequenceRun sequence_conjugate(const SalemNumber& s, const IntPolynomial& p, long n_max) {
  check_inputs(p, n_max);
  const int m = std::max(p.degree(), 1);
  const long width =
      64 + static_cast<long>(std::ceil(std::log2(static_cast<double>(n_max) * m))) + 60;
  const SalemNumber fine = refine_theta(s, width + 8);
  SequenceRun run{s, p, n_max, Method::Conjugate, {}, {width}};
  run.values.reserve(static_cast<std::size_t>(n_max));

  // omega_l as W-bit fixed point; acc[j][l] holds n j omega_l mod 2^W.
  const std::size_t angles = fine.omegas().size();
  std::vector<mpz_class> omega(angles);
  for (std::size_t l = 0; l < angles; ++l) {
    BigFloat scaled(fine.omegas()[l].precision() + width);
    mpfr_mul_2si(scaled.get(), fine.omegas()[l].get(), width, MPFR_RNDN);
    mpfr_get_z(omega[l].get_mpz_t(), scaled.get(), MPFR_RNDN);
  }
  std::vector<std::vector<mpz_class>> step(static_cast<std::size_t>(m) + 1, std::vector<mpz_class>(angles));
  std::vector<std::vector<mpz_class>> acc = step;
  for (int j = 1; j <= m; ++j)
    for (std::size_t l = 0; l < angles; ++l) step[j][l] = omega[l] * j;

  std::vector<long double> a(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= p.degree(); ++j) a[j] = p.coeff(j).get_d();
  const long double inv_theta = 1.0L / fine.theta().to_long_double();
  const long double drop = std::ldexp(1.0L, -80);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  const long double unit = std::ldexp(1.0L, -64);

  long double inv_power = 1;  // theta^-n
  mpz_class top;
  for (long n = 1; n <= n_max; ++n) {
    inv_power = inv_power * inv_theta;
    if (inv_power < drop) inv_power = 0;
    long double sum = 0;
    long double inv_nj = 1;
    for (int j = 1; j <= m; ++j) {
      inv_nj *= inv_power;
      long double cosines = 0;
      for (std::size_t l = 0; l < angles; ++l) {
        mpz_class& phase = acc[j][l];
        phase += step[j][l];
        mpz_fdiv_r_2exp(phase.get_mpz_t(), phase.get_mpz_t(), static_cast<mp_bitcnt_t>(width));
        mpz_fdiv_q_2exp(top.get_mpz_t(), phase.get_mpz_t(), static_cast<mp_bitcnt_t>(width - 64));
        const long double turn = static_cast<long double>(mpz_get_ui(top.get_mpz_t())) * unit;
        cosines += std::cos(two_pi * turn);
      }
      if (a[j] != 0) sum += a[j] * (inv_nj + 2 * cosines);
    }
    long double v = -sum;
    v -= std::floor(v);
    if (v >= 1) v = 0;
    run.values.push_back(static_cast<double>(v));
  }
  return run;
}

SequenceRun generate_sequence(const SalemNumber& s, const IntPolynomial& p, long n_max, Method method) {
  return method == Method::Exact ? sequence_exact(s, p, n_max) : sequence_conjugate(s, p, n_max);
}

double circular_distance(double a, double b) {
  double d = std::fabs(a - b);
  d -= std::floor(d);
  return std::min(d, 1 - d);
}

double max_circular_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, circular_distance(a[i], b[i]));
  return worst;
}

}  // namespace salem
