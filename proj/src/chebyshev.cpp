#include "salem/chebyshev.hpp"

#include <stdexcept>

namespace salem {

namespace {

std::vector<long double> to_long_double(const IntPolynomial& p) {
  std::vector<long double> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long double>(c.get_d()));
  return out;
}

long double horner(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

IntPolynomial cheb_poly(int j) {
  if (j < 0) throw std::invalid_argument("cheb_poly: negative degree");
  IntPolynomial prev{1};
  if (j == 0) return prev;
  IntPolynomial cur{0, 1};
  const IntPolynomial two_x{0, 2};
  for (int k = 1; k < j; ++k) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QForm::QForm(IntPolynomial inner, IntPolynomial source, bool constant_dropped)
    : inner_(std::move(inner)),
      source_(std::move(source)),
      constant_dropped_(constant_dropped),
      c_(to_long_double(inner_)),
      dc_(to_long_double(inner_.derivative())) {}

IntPolynomial QForm::polynomial() const { return mpz_class(-2) * inner_; }

long double QForm::operator()(long double w) const { return -2 * horner(c_, w); }

long double QForm::derivative(long double w) const { return -2 * horner(dc_, w); }

mpq_class QForm::exact(const mpq_class& w) const { return -2 * inner_.eval(w); }

QForm build_q(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("build_q: zero polynomial");
  IntPolynomial normalized = p.without_constant();
  if (normalized.is_zero()) throw std::invalid_argument("build_q: constant polynomial");
  IntPolynomial inner;
  for (int j = 1; j <= normalized.degree(); ++j) {
    const mpz_class a = normalized.coeff(j);
    if (a != 0) inner = inner + a * cheb_poly(j);
  }
  return QForm(std::move(inner), p, p.coeff(0) != 0);
}

std::vector<mpq_class> power_to_cheb(int m) {
  if (m < 1) throw std::invalid_argument("power_to_cheb: m must be positive");
  std::vector<mpq_class> out(static_cast<std::size_t>(m) + 1, 0);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
  for (int k = 0; 2 * k <= m; ++k) {
    mpq_class term(binomial(m, k), scale);
    if (2 * k == m) term /= 2;
    out[static_cast<std::size_t>(m - 2 * k)] += term;
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

IntPolynomial binomial_poly(int m) {
  if (m < 1) throw std::invalid_argument("binomial_poly: m must be positive");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 0; 2 * k < m; ++k) coeffs[static_cast<std::size_t>(m - 2 * k)] = binomial(m, k);
  if (m % 2 == 0) {
    // C(m, m/2) is even for every m >= 2.
    coeffs[0] = binomial(m, m / 2) / 2;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace salem
