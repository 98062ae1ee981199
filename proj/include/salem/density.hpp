#pragma once

#include "salem/branch.hpp"
#include "salem/chebyshev.hpp"

#include <stdexcept>
#include <vector>

namespace salem {

/// Evaluating f' closer than this to an asymptote abscissa raises
/// AsymptoteError instead of returning a huge number.
inline constexpr double kAsymptoteTolerance = 1e-7;
/// Two fractional parts closer than this are treated as equal; a value this
/// close to an integer is treated as an integer.
inline constexpr double kMembershipTolerance = 1e-9;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class AsymptoteError : public std::domain_error {
 public:
  AsymptoteError(double x, double abscissa);
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

/// Fractional part x - floor(x) of an exact rational, as a double in [0, 1).
double fractional_part(const mpq_class& x);

struct AsymptoteSets {
  /// v with f'(x) -> infinity as x -> v from the left.
  std::vector<double> left;
  /// v with f'(x) -> infinity as x -> v from the right.
  std::vector<double> right;

  /// left and right merged, ascending, without duplicates.
  std::vector<double> all() const;
};

/// Repartition function f and density f' of {P(theta^n)} for a Salem
/// number theta of degree 4. Only P enters; theta itself does not.
class DensityModel {
 public:
  /// `extra_bound` widens the summation range beyond the smallest valid M
  /// (the extra terms contribute nothing; used to check that claim).
  explicit DensityModel(const IntPolynomial& p, int extra_bound = 0);

  const QForm& q() const { return q_; }
  const CriticalPartition& partition() const { return partition_; }
  const std::vector<Branch>& branches() const { return branches_; }
  /// M: f sums over integer shifts i in [-M, M].
  int bound() const { return bound_; }
  /// Q at the even-multiplicity critical points inside (-1, 1).
  std::vector<double> stationary_values() const;
  const AsymptoteSets& asymptotes() const { return asymptotes_; }

  /// g(x) = pi^-1 sum_k arccos(S_k(x)); total and nondecreasing.
  double g(double x) const;
  /// f(x) = sum_{i=-M}^{M} (g(x + i) - g(i)), for x in [0, 1].
  double repartition(double x) const;
  /// f'(x) for x in (0, 1); throws AsymptoteError near an asymptote.
  double density(double x) const;
  /// Distance from x to the closest asymptote abscissa.
  double asymptote_distance(double x) const;

 private:
  QForm q_;
  CriticalPartition partition_;
  std::vector<Branch> branches_;
  int bound_ = 0;
  AsymptoteSets asymptotes_;
  std::vector<double> abscissae_;
  std::vector<double> g_at_integers_;  // g(i) for i = -M .. M
};

DensityModel make_model(const IntPolynomial& p);

inline double g_value(const DensityModel& model, double x) { return model.g(x); }
inline double repartition_f(const DensityModel& model, double x) { return model.repartition(x); }
inline double density_fprime(const DensityModel& model, double x) { return model.density(x); }
inline const AsymptoteSets& asymptotes(const DensityModel& model) { return model.asymptotes(); }

struct DensityIntegral {
  /// Quadrature of f' over the asymptote-free pieces.
  double quadrature = 0;
  /// f-increments over the excluded neighbourhoods of the asymptotes.
  double excluded = 0;
  double total() const { return quadrature + excluded; }
};

/// Integral of f' over [0, 1]: tanh-sinh quadrature between consecutive
/// asymptotes, stopping `margin` short of each, with the skipped mass
/// recovered from differences of f.
DensityIntegral integrate_density(const DensityModel& model, double margin = 2 * kAsymptoteTolerance);

}  // namespace salem
