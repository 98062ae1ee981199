#pragma once

#include "salem/density.hpp"
#include "salem/sequence.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace salem {

class DegreeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Equal-width bins [i/p, (i+1)/p); normalized = count * p / N.
struct HistogramReport {
  int p_bins = 0;
  long n = 0;
  std::vector<long> counts;
  std::vector<double> normalized;
  /// sup over bin edges of |empirical CDF - f|, when a model was supplied.
  std::optional<double> ks_distance;
  /// Bins whose closure contains an asymptote abscissa of the model.
  std::vector<int> excluded_bins;

  double bin_left(int i) const { return static_cast<double>(i) / p_bins; }
  double bin_right(int i) const { return static_cast<double>(i + 1) / p_bins; }
  /// max_i |normalized_i - 1|.
  double max_deviation_from_uniform() const;
};

HistogramReport histogram(const std::vector<double>& values, int p_bins, const DensityModel* model = nullptr);
HistogramReport histogram(const SequenceRun& run, int p_bins, const DensityModel* model = nullptr);

/// p * (f(right) - f(left)) for each bin.
std::vector<double> analytic_bin_averages(const DensityModel& model, int p_bins);

/// sup over bin edges of |empirical CDF - f|.
double ks_over_edges(const std::vector<double>& values, int p_bins, const DensityModel& model);

struct Comparison {
  HistogramReport histogram;
  std::vector<double> analytic;   // p (f(r) - f(l))
  std::vector<double> bin_error;  // |normalized - analytic|
  /// Largest bin error outside excluded_bins.
  double max_bin_error = 0;
  double ks_distance = 0;
  /// KS of the first N/100 values; the run counts as converging when
  /// ks_distance is smaller.
  std::optional<double> ks_prefix;
  bool converging = false;
};

/// Compares a run with the analytic model. The model describes degree-4
/// Salem numbers only; other degrees raise DegreeMismatchError.
Comparison compare(const SequenceRun& run, const DensityModel& model, int p_bins);

/// N quantiles f^-1((k + 1/2) / N) of the model, by bisection on f.
std::vector<double> inverse_transform_sample(const DensityModel& model, long n);

}  // namespace salem
