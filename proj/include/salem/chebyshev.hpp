#pragma once

#include "salem/int_poly.hpp"

#include <vector>

namespace salem {

/// Chebyshev polynomial of the first kind T_j in monomial form.
IntPolynomial cheb_poly(int j);

/// Q(w) = -2 * sum_j a_j T_j(w) for an integer polynomial P = sum_j a_j x^j,
/// stored through its inner integer coefficients c_k so that
/// Q(w) = -2 * sum_k c_k w^k. The constant term of P is zeroed before the
/// transform; only fractional parts of P(theta^n) matter.
class QForm {
 public:
  QForm(IntPolynomial inner, IntPolynomial source, bool constant_dropped);

  /// c_0 .. c_m
  const IntPolynomial& inner() const { return inner_; }
  const IntPolynomial& source() const { return source_; }
  /// True when P had a nonzero constant term that was dropped.
  bool constant_dropped() const { return constant_dropped_; }
  int degree() const { return inner_.degree(); }

  /// Q itself as an integer polynomial (-2 * inner).
  IntPolynomial polynomial() const;

  long double operator()(long double w) const;
  long double derivative(long double w) const;
  mpq_class exact(const mpq_class& w) const;

 private:
  IntPolynomial inner_;
  IntPolynomial source_;
  bool constant_dropped_;
  std::vector<long double> c_;
  std::vector<long double> dc_;
};

/// Monomial coefficients c_k = sum_{j>=k} a_j b<j>_k of sum_j a_j T_j.
QForm build_q(const IntPolynomial& p);

/// Coefficients (indexed by Chebyshev degree) of x^m in the T basis:
/// x^m = 2^(1-m) sum'_{k<=m/2} C(m,k) T_{m-2k}, the k = m/2 term halved.
std::vector<mpq_class> power_to_cheb(int m);

/// Integer P with build_q(P) = -2^m x^m (odd m) or -2^m x^m + C(m, m/2)
/// (even m; the constant is an integer and invisible modulo 1).
IntPolynomial binomial_poly(int m);

}  // namespace salem
