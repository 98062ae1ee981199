#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace salem {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial with exact integer coefficients stored in ascending order
/// (index j holds the coefficient of x^j). Always kept canonical: the
/// leading stored coefficient is nonzero, and the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const mpz_class& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of x^j, zero beyond the degree.
  mpz_class coeff(int j) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_palindromic() const;

  IntPolynomial derivative() const;
  /// Same polynomial with the constant term set to zero.
  IntPolynomial without_constant() const;
  /// p(-x)
  IntPolynomial reflected() const;

  mpz_class content() const;
  /// Divided by its content, with a positive leading coefficient.
  IntPolynomial primitive_part() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  long double eval(long double x) const;
  int sign_at(const mpq_class& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p);
  friend IntPolynomial operator-(const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Human-readable monomial form, highest power first ("x^4-x^3-x^2-x+1").
  std::string to_string() const;
  /// Comma-separated ascending coefficients ("1,-1,-1,-1,1").
  std::string to_csv() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Accepts either an ascending comma-separated coefficient list ("0,6,5,3")
/// or a monomial expression ("x^4-x^3-x^2-x+1", "3*x^3 + 5x^2 + 6x").
/// Throws ParseError on malformed input or a zero polynomial.
IntPolynomial parse_poly(std::string_view text);

/// Exact quotient a / b over the integers, or nullopt when b does not divide a
/// in Z[x].
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) is the zero polynomial.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free decomposition p = c * prod f_i^i. Returns the nonconstant
/// primitive factors f_i paired with their multiplicity i.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

}  // namespace salem
