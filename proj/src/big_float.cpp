#include "salem/big_float.hpp"

#include <utility>
#include <vector>

namespace salem {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from(const mpq_class& q, mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_set_q(out.value_, q.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from(const mpz_class& z, mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_set_z(out.value_, z.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from(double d, mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_set_d(out.value_, d, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_decimal(int digits) const {
  int size = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, value_);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, value_);
  return std::string(buf.data());
}

double fractional_part(const BigFloat& x) {
  BigFloat floor_x(x.precision());
  mpfr_floor(floor_x.get(), x.get());
  BigFloat frac(x.precision());
  mpfr_sub(frac.get(), x.get(), floor_x.get(), MPFR_RNDN);
  double v = frac.to_double();
  if (v >= 1.0) v -= 1.0;
  return v;
}

}  // namespace salem
