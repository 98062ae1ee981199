#pragma once

#include "salem/int_poly.hpp"

#include <vector>

namespace salem {

/// One isolated real root. `factor` is the square-free factor of the input
/// that has this root as a simple root; the open interval (lo, hi) contains
/// it and no other root of the input. An exactly located rational root has
/// lo == hi.
struct RealRoot {
  IntPolynomial factor;
  mpq_class lo;
  mpq_class hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  mpq_class width() const { return hi - lo; }
  mpq_class midpoint() const { return (lo + hi) / 2; }

  /// Bisect until the width is at most 2^-bits. Endpoints stay on the
  /// dyadic grid they started on, so repeated refinement is monotone.
  RealRoot refined(long bits) const;
  /// Bisect until the interval lies strictly on one side of `point`
  /// (or the root is found to equal it).
  RealRoot separated_from(const mpq_class& point) const;
};

/// Isolate all distinct real roots of p (nonzero), sorted ascending.
/// Square-free decomposition followed by Descartes-rule bisection on exact
/// integer polynomials; intervals are pairwise disjoint.
std::vector<RealRoot> isolate_real_roots(const IntPolynomial& p);

/// Number of sign variations in a coefficient sequence (zeros skipped).
int sign_variations(const std::vector<mpz_class>& coeffs);

}  // namespace salem
