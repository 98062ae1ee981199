#pragma once

#include "salem/salem.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace salem {

enum class Method { Exact, Conjugate };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

class PrecisionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultPrecisionCap = 1L << 22;

/// {P(theta^n)} for n = 1 .. n_max.
struct SequenceRun {
  SalemNumber salem;
  IntPolynomial p;
  long n_max = 0;
  Method method = Method::Conjugate;
  std::vector<double> values;
  /// Working precision in bits: one entry per segment (exact) or the fixed
  /// phase width (conjugate).
  std::vector<long> precision_log;
};

/// P(theta^n) in MPFR, with precision growing in segments as
/// ceil(n deg(P) log2 theta) + guard bits. Throws PrecisionCapError if the
/// last segment needs more than `cap` bits.
SequenceRun sequence_exact(const SalemNumber& s, const IntPolynomial& p, long n_max,
                           long cap = kDefaultPrecisionCap);

/// -sum_j a_j (theta^-nj + 2 sum_l cos 2 pi n j omega_l) mod 1, with
/// n j omega_l reduced mod 1 in fixed-point arithmetic.
SequenceRun sequence_conjugate(const SalemNumber& s, const IntPolynomial& p, long n_max);

SequenceRun generate_sequence(const SalemNumber& s, const IntPolynomial& p, long n_max, Method method);

/// Distance between a and b on the circle R/Z.
double circular_distance(double a, double b);

/// max_n circular_distance(a[n], b[n]) over the common prefix.
double max_circular_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace salem
