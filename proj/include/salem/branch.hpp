#pragma once

#include "salem/chebyshev.hpp"

#include <stdexcept>
#include <vector>

namespace salem {

class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Bits to which irrational critical points are refined.
inline constexpr long kCriticalBits = 120;

/// A real root of Q' with the value of Q there. `x` is exact for rational
/// roots and otherwise a dyadic approximation within 2^-kCriticalBits.
struct CriticalPoint {
  mpq_class x;
  mpq_class value;
  int multiplicity = 1;

  double x_d() const { return x.get_d(); }
  double value_d() const { return value.get_d(); }
  /// Q' changes sign here (odd multiplicity).
  bool turning() const { return multiplicity % 2 == 1; }
};

struct CriticalPartition {
  /// -1 = x_0 < x_1 < ... < x_K = 1; interior points are the sign changes of Q'.
  std::vector<mpq_class> points;
  /// Sign changes of Q' in (-1, 1), ascending.
  std::vector<CriticalPoint> turning;
  /// Even-multiplicity roots of Q' in (-1, 1): Q stays monotone through them.
  std::vector<CriticalPoint> stationary;
  /// Every real root of Q', including those outside [-1, 1].
  std::vector<CriticalPoint> all;

  int branch_count() const { return static_cast<int>(points.size()) - 1; }
};

CriticalPartition critical_partition(const QForm& q);

/// One monotone piece of Q on [x_lo, x_hi] with value range [alpha, beta].
struct Branch {
  int k = 0;  // 1-based, left to right
  mpq_class x_lo, x_hi;
  mpq_class alpha, beta;
  bool increasing = false;

  double lo() const { return x_lo.get_d(); }
  double hi() const { return x_hi.get_d(); }
  double alpha_d() const { return alpha.get_d(); }
  double beta_d() const { return beta.get_d(); }
};

std::vector<Branch> branches(const QForm& q);
std::vector<Branch> branches(const QForm& q, const CriticalPartition& partition);

/// x in [x_lo, x_hi] with Q(x) = y. Safeguarded Newton inside a shrinking
/// bracket; falls back to bisection whenever Newton leaves the bracket or
/// stalls (near critical points the derivative vanishes). Throws
/// OutOfRangeError when y is outside [alpha, beta].
double invert_on_branch(const Branch& b, const QForm& q, double y);

/// Total extension of the branch inverse: y is clamped into [alpha, beta];
/// the inverse is negated for increasing branches. Always in [-1, 1].
double s_k(const Branch& b, const QForm& q, double y);

}  // namespace salem
