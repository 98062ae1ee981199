#include "salem/closed_forms.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace salem {

double dupain_density(long a1, double x) {
  if (a1 < 1) throw std::invalid_argument("dupain_density: a1 must be positive");
  const long double scale = 2.0L * a1;
  long double sum = 0;
  for (long i = -2 * a1; i <= 2 * a1 - 1; ++i) {
    const long double u = (x + i) / scale;
    sum += 1.0L / std::sqrt(1.0L - u * u);
  }
  return static_cast<double>(sum / (scale * std::numbers::pi_v<long double>));
}

double dupain_repartition(long a1, double x) {
  if (a1 < 1) throw std::invalid_argument("dupain_repartition: a1 must be positive");
  const long double scale = 2.0L * a1;
  long double sum = 0;
  for (long i = -2 * a1; i <= 2 * a1 - 1; ++i)
    sum += std::acos(-(x + i) / scale) - std::acos(-i / scale);
  return static_cast<double>(sum / std::numbers::pi_v<long double>);
}

namespace {

// |d/dy arccos(-(a1 + sign sqrt(D)) / (4 a2))|, or 0 off the branch.
long double quadratic_branch_slope(long a2, long a1, long double y, int sign) {
  const long double disc = static_cast<long double>(a1) * a1 + 8.0L * a2 * a2 - 4.0L * a2 * y;
  if (disc <= 0) return 0;
  const long double root = std::sqrt(disc);
  const long double shifted = a1 + sign * root;
  const long double gap = 16.0L * a2 * a2 - shifted * shifted;
  if (gap <= 0) return 0;
  return 2.0L * std::labs(a2) / (root * std::sqrt(gap));
}

}  // namespace

double quadratic_density(long a2, long a1, double x) {
  if (a2 == 0) throw std::invalid_argument("quadratic_density: a2 must be nonzero");
  const long bound = 6 * std::labs(a2) + 2 * std::labs(a1);
  long double sum = 0;
  for (long i = -bound; i <= bound; ++i) {
    const long double y = x + i;
    sum += quadratic_branch_slope(a2, a1, y, 1) + quadratic_branch_slope(a2, a1, y, -1);
  }
  return static_cast<double>(sum / std::numbers::pi_v<long double>);
}

QuadraticAsymptote quadratic_asymptote_test(long a2, long a1) {
  if (a2 == 0) throw std::invalid_argument("quadratic_asymptote_test: a2 must be nonzero");
  QuadraticAsymptote out;
  mpq_class v(a1 * a1, 4 * a2);
  v.canonicalize();
  v += 2 * a2;
  const bool inside = std::labs(a1) < 4 * std::labs(a2);
  if (!inside || a1 == 0 || v.get_den() == 1) {
    out.shape = "∪";
    return out;
  }
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  out.v = mpq_class(v - fl).get_d();
  out.shape = a2 > 0 ? "∪⌣" : "⌣∪";
  return out;
}

std::optional<std::pair<double, double>> cubic_criticals(long a3, long a2, long a1) {
  if (a3 == 0) throw std::invalid_argument("cubic_criticals: a3 must be nonzero");
  const long disc = 9 * a3 * a3 + a2 * a2 - 3 * a1 * a3;
  if (disc < 0) return std::nullopt;
  const double root = std::sqrt(static_cast<double>(disc));
  double x1 = (-a2 - root) / (6.0 * a3);
  double x2 = (-a2 + root) / (6.0 * a3);
  if (x1 > x2) std::swap(x1, x2);
  return std::make_pair(x1, x2);
}

}  // namespace salem
