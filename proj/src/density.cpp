#include "salem/density.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace salem {

AsymptoteError::AsymptoteError(double x, double abscissa)
    : std::domain_error("f' evaluated at " + std::to_string(x) + ", within tolerance of the asymptote at " +
                        std::to_string(abscissa)),
      abscissa_(abscissa) {}

double fractional_part(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class frac = x - fl;
  double v = frac.get_d();
  return v >= 1.0 ? 0.0 : v;
}

namespace {

void insert_unique(std::vector<double>& set, double v) {
  for (double existing : set)
    if (std::fabs(existing - v) < kMembershipTolerance) return;
  set.push_back(v);
}

// Adds the fractional part of `value` to `set`; integral values land on
// `integral_side` (0 or 1).
void add_fraction(std::vector<double>& set, const mpq_class& value, double integral_side) {
  double f = fractional_part(value);
  if (f < kMembershipTolerance || f > 1 - kMembershipTolerance)
    insert_unique(set, integral_side);
  else
    insert_unique(set, f);
}

}  // namespace

std::vector<double> AsymptoteSets::all() const {
  std::vector<double> out;
  for (double v : left) insert_unique(out, v);
  for (double v : right) insert_unique(out, v);
  std::sort(out.begin(), out.end());
  return out;
}

DensityModel::DensityModel(const IntPolynomial& p, int extra_bound)
    : q_(build_q(p)), partition_(critical_partition(q_)), branches_(salem::branches(q_, partition_)) {
  mpq_class largest = 0;
  for (const auto& b : branches_) largest = std::max({largest, mpq_class(abs(b.alpha)), mpq_class(abs(b.beta))});
  mpz_class ceil_largest;
  mpz_cdiv_q(ceil_largest.get_mpz_t(), largest.get_num_mpz_t(), largest.get_den_mpz_t());
  bound_ = static_cast<int>(ceil_largest.get_si()) + extra_bound;

  asymptotes_.left.push_back(1.0);
  asymptotes_.right.push_back(0.0);
  for (const auto& b : branches_) {
    add_fraction(asymptotes_.left, b.beta, 1.0);
    add_fraction(asymptotes_.right, b.alpha, 0.0);
  }
  for (const auto& cp : partition_.stationary) {
    add_fraction(asymptotes_.left, cp.value, 1.0);
    add_fraction(asymptotes_.right, cp.value, 0.0);
  }
  std::sort(asymptotes_.left.begin(), asymptotes_.left.end());
  std::sort(asymptotes_.right.begin(), asymptotes_.right.end());
  abscissae_ = asymptotes_.all();

  for (int i = -bound_; i <= bound_; ++i) g_at_integers_.push_back(g(i));
}

std::vector<double> DensityModel::stationary_values() const {
  std::vector<double> out;
  for (const auto& cp : partition_.stationary) out.push_back(cp.value_d());
  return out;
}

double DensityModel::g(double x) const {
  double sum = 0;
  for (const auto& b : branches_) sum += std::acos(s_k(b, q_, x));
  return sum / std::numbers::pi;
}

double DensityModel::repartition(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("repartition: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  double sum = 0;
  for (int i = -bound_; i <= bound_; ++i)
    sum += g(x + i) - g_at_integers_[static_cast<std::size_t>(i + bound_)];
  return sum;
}

double DensityModel::asymptote_distance(double x) const {
  double best = INFINITY;
  for (double v : abscissae_) best = std::min(best, std::fabs(x - v));
  return best;
}

double DensityModel::density(double x) const {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("density: x must lie in (0, 1)");
  for (double v : abscissae_)
    if (std::fabs(x - v) < kAsymptoteTolerance) throw AsymptoteError(x, v);
  long double sum = 0;
  for (int i = -bound_; i <= bound_; ++i) {
    const double y = x + i;
    for (const auto& b : branches_) {
      if (y < b.alpha_d() || y > b.beta_d()) continue;
      const long double u = invert_on_branch(b, q_, y);
      const long double slope = std::fabs(q_.derivative(u));
      sum += 1.0L / (std::sqrt(1.0L - u * u) * slope);
    }
  }
  return static_cast<double>(sum / std::numbers::pi_v<long double>);
}

DensityModel make_model(const IntPolynomial& p) { return DensityModel(p); }

DensityIntegral integrate_density(const DensityModel& model, double margin) {
  DensityIntegral out;
  const auto cuts = model.asymptotes().all();
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto fprime = [&](double x) { return model.density(x); };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b - a <= 2 * margin) {
      out.excluded += model.repartition(b) - model.repartition(a);
      continue;
    }
    out.quadrature += integrator.integrate(fprime, a + margin, b - margin, 1e-12);
    out.excluded += model.repartition(a + margin) - model.repartition(a);
    out.excluded += model.repartition(b) - model.repartition(b - margin);
  }
  return out;
}

}  // namespace salem
