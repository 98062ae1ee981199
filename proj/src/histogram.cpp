#include "salem/histogram.hpp"

#include <algorithm>
#include <cmath>

namespace salem {

double HistogramReport::max_deviation_from_uniform() const {
  double worst = 0;
  for (double v : normalized) worst = std::max(worst, std::fabs(v - 1));
  return worst;
}

namespace {

std::vector<long> bin_counts(const std::vector<double>& values, int p_bins) {
  std::vector<long> counts(static_cast<std::size_t>(p_bins), 0);
  for (double v : values) {
    if (!(v >= 0.0 && v < 1.0)) throw std::domain_error("histogram: value outside [0, 1)");
    int i = static_cast<int>(std::floor(v * p_bins));
    counts[static_cast<std::size_t>(std::min(i, p_bins - 1))]++;
  }
  return counts;
}

double ks_from_counts(const std::vector<long>& counts, long n, const DensityModel& model) {
  const int p_bins = static_cast<int>(counts.size());
  double worst = 0;
  long below = 0;
  for (int i = 1; i <= p_bins; ++i) {
    below += counts[static_cast<std::size_t>(i - 1)];
    const double edge = static_cast<double>(i) / p_bins;
    worst = std::max(worst, std::fabs(static_cast<double>(below) / n - model.repartition(edge)));
  }
  return worst;
}

}  // namespace

HistogramReport histogram(const std::vector<double>& values, int p_bins, const DensityModel* model) {
  if (p_bins < 2) throw std::invalid_argument("histogram: need at least 2 bins");
  if (values.empty()) throw std::invalid_argument("histogram: no values");
  HistogramReport out;
  out.p_bins = p_bins;
  out.n = static_cast<long>(values.size());
  out.counts = bin_counts(values, p_bins);
  for (long c : out.counts) out.normalized.push_back(static_cast<double>(c) * p_bins / static_cast<double>(out.n));
  if (model) {
    out.ks_distance = ks_from_counts(out.counts, out.n, *model);
    const auto abscissae = model->asymptotes().all();
    for (int i = 0; i < p_bins; ++i) {
      const double l = out.bin_left(i) - kMembershipTolerance, r = out.bin_right(i) + kMembershipTolerance;
      if (std::any_of(abscissae.begin(), abscissae.end(), [&](double v) { return v >= l && v <= r; }))
        out.excluded_bins.push_back(i);
    }
  }
  return out;
}

HistogramReport histogram(const SequenceRun& run, int p_bins, const DensityModel* model) {
  return histogram(run.values, p_bins, model);
}

std::vector<double> analytic_bin_averages(const DensityModel& model, int p_bins) {
  std::vector<double> out;
  double prev = 0;
  for (int i = 1; i <= p_bins; ++i) {
    const double next = model.repartition(static_cast<double>(i) / p_bins);
    out.push_back(p_bins * (next - prev));
    prev = next;
  }
  return out;
}

double ks_over_edges(const std::vector<double>& values, int p_bins, const DensityModel& model) {
  return ks_from_counts(bin_counts(values, p_bins), static_cast<long>(values.size()), model);
}

Comparison compare(const SequenceRun& run, const DensityModel& model, int p_bins) {
  if (run.salem.degree() != 4)
    throw DegreeMismatchError("the analytic density covers Salem numbers of degree 4 only, got degree " +
                              std::to_string(run.salem.degree()));
  Comparison out;
  out.histogram = histogram(run, p_bins, &model);
  out.analytic = analytic_bin_averages(model, p_bins);
  for (int i = 0; i < p_bins; ++i) {
    const double err = std::fabs(out.histogram.normalized[static_cast<std::size_t>(i)] -
                                 out.analytic[static_cast<std::size_t>(i)]);
    out.bin_error.push_back(err);
    const auto& ex = out.histogram.excluded_bins;
    if (std::find(ex.begin(), ex.end(), i) == ex.end()) out.max_bin_error = std::max(out.max_bin_error, err);
  }
  out.ks_distance = *out.histogram.ks_distance;
  const std::size_t prefix = run.values.size() / 100;
  if (prefix > 0) {
    std::vector<double> head(run.values.begin(), run.values.begin() + static_cast<std::ptrdiff_t>(prefix));
    out.ks_prefix = ks_over_edges(head, p_bins, model);
    out.converging = out.ks_distance < *out.ks_prefix;
  }
  return out;
}

std::vector<double> inverse_transform_sample(const DensityModel& model, long n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    const double target = (k + 0.5) / static_cast<double>(n);
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (model.repartition(mid) < target ? lo : hi) = mid;
    }
    out.push_back(std::min(0.5 * (lo + hi), std::nextafter(1.0, 0.0)));
  }
  return out;
}

}  // namespace salem
