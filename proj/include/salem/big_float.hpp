#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace salem {

/// Owning handle for an mpfr_t with value semantics: copies and
/// assignments carry the source precision along. Use mpfr_set on get() to
/// round into an existing precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from(const mpq_class& q, mpfr_prec_t precision);
  static BigFloat from(const mpz_class& z, mpfr_prec_t precision);
  static BigFloat from(double d, mpfr_prec_t precision);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Fixed-point decimal with `digits` digits after the point, rounded to
  /// nearest.
  std::string to_decimal(int digits) const;

 private:
  mpfr_t value_;
};

/// x - floor(x), in [0, 1), as a double. The result is wrapped back to 0 if
/// rounding to double would produce exactly 1.
double fractional_part(const BigFloat& x);

}  // namespace salem
