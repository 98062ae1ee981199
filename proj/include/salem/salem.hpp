#pragma once

#include "salem/big_float.hpp"
#include "salem/int_poly.hpp"
#include "salem/roots.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace salem {

/// Why a polynomial was rejected as the minimal polynomial of a Salem
/// number. Checks run in this order and the first failure is reported.
enum class Rejection {
  NotMonic,
  OddOrSmallDegree,
  Reducible,
  NotReciprocal,
  RootPatternMismatch,
};

std::string_view to_string(Rejection r);

class SalemRejectionError : public std::runtime_error {
 public:
  SalemRejectionError(Rejection reason, const std::string& detail);
  Rejection reason() const { return reason_; }

 private:
  Rejection reason_;
};

inline constexpr long kDefaultPrecisionBits = 128;

/// A verified Salem number: its minimal polynomial, theta > 1 and the
/// conjugate angles omega_j in (0, 1/2) (unit-circle conjugates are
/// exp(+-2 pi i omega_j)), all known to `precision_bits()` bits.
/// Immutable; refinement produces a new value.
class SalemNumber {
 public:
  const IntPolynomial& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  /// t, where the degree is 2t.
  int half_degree() const { return degree() / 2; }
  long precision_bits() const { return bits_; }

  /// theta truncated to `precision_bits()` fractional bits.
  const BigFloat& theta() const { return theta_; }
  /// Dyadic bracket lo <= theta < hi of width 2^-precision_bits.
  const RealRoot& theta_bracket() const { return theta_root_; }
  /// omega_1 < ... < omega_{t-1}.
  const std::vector<BigFloat>& omegas() const { return omegas_; }
  /// Roots y_j = 2 cos(2 pi omega_j) of the trace polynomial, same order.
  const std::vector<RealRoot>& trace_roots() const { return trace_roots_; }

  /// theta to an arbitrary number of bits (Newton iteration seeded from the
  /// certified bracket). Used when powering theta at high precision.
  BigFloat theta_with_bits(long bits) const;

 private:
  friend SalemNumber build_salem(const IntPolynomial&, const RealRoot&, const std::vector<RealRoot>&, long);

  IntPolynomial minpoly_;
  long bits_ = 0;
  BigFloat theta_;
  RealRoot theta_root_;
  std::vector<BigFloat> omegas_;
  std::vector<RealRoot> trace_roots_;
};

struct SalemVerdict {
  std::optional<SalemNumber> salem;
  std::optional<Rejection> rejection;
  std::string detail;

  bool ok() const { return salem.has_value(); }
};

/// Runs the checks named in Rejection. Unit-circle membership is decided
/// exactly through the trace polynomial, never by floating-point moduli.
SalemVerdict verify_salem(const IntPolynomial& minpoly, long bits = kDefaultPrecisionBits);

/// verify_salem, throwing SalemRejectionError on rejection.
SalemNumber require_salem(const IntPolynomial& minpoly, long bits = kDefaultPrecisionBits);

/// Same Salem number with theta and omegas known to at least `bits` bits.
/// Bits already known are unchanged.
SalemNumber refine_theta(const SalemNumber& s, long bits);

/// For a reciprocal p of degree 2t, the degree-t polynomial R with
/// p(x) = x^t R(x + 1/x).
IntPolynomial trace_polynomial(const IntPolynomial& reciprocal);

/// Minimal polynomial of theta^m, computed exactly from Newton power sums.
IntPolynomial salem_power_minpoly(const SalemNumber& s, int m);

/// Reads a minimal polynomial from a fixture file under the data directory
/// (first non-comment line, any parse_poly syntax) and verifies it.
SalemNumber load_salem_fixture(const std::string& name);

}  // namespace salem
