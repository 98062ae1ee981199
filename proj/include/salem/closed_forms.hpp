#pragma once

#include <optional>
#include <string>
#include <utility>

namespace salem {

/// f' for P(x) = a1 x (a1 >= 1):
/// (2 a1 pi)^-1 sum_{i=-2a1}^{2a1-1} (1 - (x+i)^2 / (4 a1^2))^-1/2.
double dupain_density(long a1, double x);

/// f for P(x) = a1 x (a1 >= 1) as a telescoping arccos sum.
double dupain_repartition(long a1, double x);

/// f' for P(x) = a2 x^2 + a1 x from the two explicit branch inverses
/// -(a1 +- sqrt(D)) / (4 a2), D = a1^2 + 8 a2^2 - 4 a2 y, summed over
/// i in [-M, M] with M = 6|a2| + 2|a1|.
double quadratic_density(long a2, long a1, double x);

struct QuadraticAsymptote {
  /// {V} for V = a1^2 / (4 a2) + 2 a2, when it is an interior asymptote.
  std::optional<double> v;
  /// "∪⌣", "⌣∪" or "∪".
  std::string shape;
};

/// Interior asymptote of the quadratic density: present iff
/// |a1| < 4|a2|, a1 != 0 and V is not an integer.
QuadraticAsymptote quadratic_asymptote_test(long a2, long a1);

/// Roots (-a2 -+ sqrt(9 a3^2 + a2^2 - 3 a1 a3)) / (6 a3) of Q' for
/// P = a3 x^3 + a2 x^2 + a1 x, ascending; nullopt when they are not real.
std::optional<std::pair<double, double>> cubic_criticals(long a3, long a2, long a1);

}  // namespace salem
