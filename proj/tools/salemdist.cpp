// salemdist: distribution of {P(theta^n)} mod 1 for Salem numbers theta.
//
//   salemdist verify   --minpoly "x^4-x^3-x^2-x+1"
//   salemdist density  --minpoly ... --poly 0,1,1,1 --grid 200
//   salemdist simulate --minpoly ... --poly 0,1,1,1 -N 1000000 --bins 50
//   salemdist table1
//   salemdist bessel   --t 2 --terms 10000 --grid 100
//
// Exit codes: 0 success, 2 validation failure, 3 numeric failure.

#include "salem/closed_forms.hpp"
#include "salem/histogram.hpp"
#include "salem/report.hpp"
#include "salem/special_forms.hpp"
#include "salem/table1.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using salem::Json;

constexpr int kValidationFailure = 2;
constexpr int kNumericFailure = 3;

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string minpoly = "x^4-x^3-x^2-x+1";
  std::string poly = "0,1";
  int grid = 100;
  int bins = 50;
  long n_max = 100000;
  std::string method = "conjugate";
  int terms = 10000;
  int t = 2;
  std::string smoothing = "cesaro";
  int digits = 30;
  bool cross_check = false;
  std::string output;
  std::string format = "csv";
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationFailure("cannot open " + path + " for writing");
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// Every line of a JSON document prefixed with "# ", for CSV headers.
std::string commented(const Json& j) {
  std::istringstream in(j.dump(2));
  std::string line, out;
  while (std::getline(in, line)) out += "# " + line + "\n";
  return out;
}

salem::SalemNumber salem_from(const std::string& text) {
  auto verdict = salem::verify_salem(salem::parse_poly(text));
  if (!verdict.ok())
    throw ValidationFailure(fmt::format("{} is not a Salem minimal polynomial: {} ({})", text,
                                        salem::to_string(*verdict.rejection), verdict.detail));
  return *verdict.salem;
}

salem::IntPolynomial poly_from(const std::string& text) {
  auto p = salem::parse_poly(text);
  if (p.without_constant().is_zero()) throw ValidationFailure("P must be nonconstant");
  return p;
}

int cmd_verify(const RunConfig& cfg) {
  const auto verdict = salem::verify_salem(salem::parse_poly(cfg.minpoly));
  Json j = verdict.ok() ? salem::salem_json(*verdict.salem, cfg.digits) : salem::rejection_json(verdict);
  Sink sink(cfg.output);
  sink.out() << j.dump(2) << "\n";
  return verdict.ok() ? 0 : kValidationFailure;
}

int cmd_density(const RunConfig& cfg) {
  const auto s = salem_from(cfg.minpoly);
  if (s.degree() != 4)
    throw salem::DegreeMismatchError(fmt::format(
        "the analytic density needs a Salem number of degree 4, got degree {}; use 'simulate' instead", s.degree()));
  const auto p = poly_from(cfg.poly);
  const salem::DensityModel model(p);
  const auto shape = salem::shape_classify(model);

  Json summary;
  summary["minpoly"] = s.minpoly().to_string();
  summary["poly"] = p.to_string();
  summary["Q"] = model.q().polynomial().to_string();
  summary["M"] = model.bound();
  summary["constant_dropped"] = model.q().constant_dropped();
  summary["shape_report"] = salem::shape_json(shape);

  Json rows = Json::array();
  std::string csv = "x,f,fprime\n";
  for (int k = 0; k <= cfg.grid; ++k) {
    const double x = static_cast<double>(k) / cfg.grid;
    const std::string f = salem::fixed(model.repartition(x), 12);
    std::string fp = "inf";
    if (model.asymptote_distance(x) >= salem::kAsymptoteTolerance) fp = salem::fixed(model.density(x), 12);
    csv += fmt::format("{},{},{}\n", salem::fixed(x, 6), f, fp);
    rows.push_back({{"x", salem::fixed(x, 6)}, {"f", f}, {"fprime", fp}});
  }

  Sink sink(cfg.output);
  if (cfg.format == "json") {
    summary["rows"] = rows;
    sink.out() << summary.dump(2) << "\n";
  } else {
    sink.out() << commented(summary) << csv;
  }
  return 0;
}

int cmd_simulate(const RunConfig& cfg) {
  const auto s = salem_from(cfg.minpoly);
  const auto p = poly_from(cfg.poly);
  const auto method = salem::parse_method(cfg.method);
  const auto run = salem::generate_sequence(s, p, cfg.n_max, method);

  Json summary;
  summary["minpoly"] = s.minpoly().to_string();
  summary["degree"] = s.degree();
  summary["poly"] = p.to_string();
  summary["n_max"] = cfg.n_max;
  summary["bins"] = cfg.bins;
  summary["method"] = std::string(salem::to_string(method));
  summary["precision_bits"] = run.precision_log;

  std::vector<double> analytic;
  salem::HistogramReport hist;
  if (s.degree() == 4) {
    const salem::DensityModel model(p);
    const auto cmp = salem::compare(run, model, cfg.bins);
    hist = cmp.histogram;
    analytic = cmp.analytic;
    summary["ks_distance"] = salem::fixed(cmp.ks_distance, 8);
    if (cmp.ks_prefix) summary["ks_prefix"] = salem::fixed(*cmp.ks_prefix, 8);
    summary["converging"] = cmp.converging;
    summary["max_bin_error"] = salem::fixed(cmp.max_bin_error, 8);
    summary["excluded_bins"] = hist.excluded_bins;
  } else {
    hist = salem::histogram(run, cfg.bins);
    summary["analytic"] = "unavailable for degree " + std::to_string(s.degree());
  }
  summary["max_deviation_from_uniform"] = salem::fixed(hist.max_deviation_from_uniform(), 8);
  if (cfg.cross_check) {
    const auto other = salem::generate_sequence(
        s, p, cfg.n_max, method == salem::Method::Exact ? salem::Method::Conjugate : salem::Method::Exact);
    summary["cross_check_max_diff"] = fmt::format("{:.3e}", salem::max_circular_distance(run.values, other.values));
  }

  std::string csv = "bin_left,bin_right,count,normalized,analytic_bin_avg\n";
  Json rows = Json::array();
  for (int i = 0; i < cfg.bins; ++i) {
    const std::string avg = analytic.empty() ? "" : salem::fixed(analytic[static_cast<std::size_t>(i)], 8);
    const auto idx = static_cast<std::size_t>(i);
    csv += fmt::format("{},{},{},{},{}\n", salem::fixed(hist.bin_left(i), 6), salem::fixed(hist.bin_right(i), 6),
                       hist.counts[idx], salem::fixed(hist.normalized[idx], 8), avg);
    rows.push_back({{"bin_left", salem::fixed(hist.bin_left(i), 6)},
                    {"bin_right", salem::fixed(hist.bin_right(i), 6)},
                    {"count", hist.counts[idx]},
                    {"normalized", salem::fixed(hist.normalized[idx], 8)},
                    {"analytic_bin_avg", avg}});
  }

  Sink sink(cfg.output);
  if (cfg.format == "json") {
    summary["rows"] = rows;
    sink.out() << summary.dump(2) << "\n";
  } else {
    sink.out() << commented(summary) << csv;
  }
  return 0;
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "{}";
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return "{" + out + "}";
}

int cmd_table1(const RunConfig& cfg) {
  Sink sink(cfg.output);
  auto& out = sink.out();
  int mismatches = 0;
  Json rows = Json::array();
  const std::string header = fmt::format("{:<10} {:>6} {:>6} {:>7} {:>7}  {:<16} {:<16} {:<8} {}", "a3,a2,a1",
                                         "x1", "x2", "Q(x1)", "Q(x2)", "A", "B", "S", "shape");
  if (cfg.format != "json") out << header << "\n";
  for (const auto& expected : salem::published_shape_table()) {
    const auto row = salem::compute_shape_row(expected.a3, expected.a2, expected.a1);
    const auto diff = salem::row_differences(expected, row);
    if (!diff.empty()) ++mismatches;
    const std::string coeffs = fmt::format("{},{},{}", row.a3, row.a2, row.a1);
    if (cfg.format == "json") {
      rows.push_back({{"coefficients", coeffs},
                      {"x1", row.x1},
                      {"x2", row.x2},
                      {"Q(x1)", row.q1},
                      {"Q(x2)", row.q2},
                      {"A", row.A},
                      {"B", row.B},
                      {"S", row.S},
                      {"shape", row.shape},
                      {"mismatch", diff}});
      continue;
    }
    out << fmt::format("{:<10} {:>6} {:>6} {:>7} {:>7}  {:<16} {:<16} {:<8} {}", coeffs, row.x1, row.x2, row.q1,
                       row.q2, join(row.A), join(row.B), join(row.S), row.shape);
    if (!diff.empty()) {
      std::string fields;
      for (const auto& d : diff) fields += " " + d;
      out << "   MISMATCH:" << fields;
    }
    out << "\n";
    for (const auto& field : diff) {
      std::string want, got;
      if (field == "x1") want = expected.x1, got = row.x1;
      if (field == "x2") want = expected.x2, got = row.x2;
      if (field == "Q(x1)") want = expected.q1, got = row.q1;
      if (field == "Q(x2)") want = expected.q2, got = row.q2;
      if (field == "A") want = join(expected.A), got = join(row.A);
      if (field == "B") want = join(expected.B), got = join(row.B);
      if (field == "S") want = join(expected.S), got = join(row.S);
      if (field == "shape") want = expected.shape, got = row.shape;
      out << fmt::format("    {}: published {} computed {}\n", field, want, got);
    }
  }
  const auto total = salem::published_shape_table().size();
  if (cfg.format == "json") {
    Json j;
    j["rows"] = rows;
    j["matching_rows"] = total - static_cast<std::size_t>(mismatches);
    j["total_rows"] = total;
    out << j.dump(2) << "\n";
  } else {
    out << fmt::format("{}/{} rows match\n", total - static_cast<std::size_t>(mismatches), total);
  }
  return mismatches == 0 ? 0 : kValidationFailure;
}

int cmd_bessel(const RunConfig& cfg) {
  salem::BesselSeriesParams params;
  params.t = cfg.t;
  params.terms = cfg.terms;
  if (cfg.smoothing == "cesaro")
    params.smoothing = salem::Smoothing::Cesaro;
  else if (cfg.smoothing == "none")
    params.smoothing = salem::Smoothing::None;
  else
    throw ValidationFailure("smoothing must be cesaro or none");
  const salem::BesselSeries series(params);

  Json meta;
  meta["t"] = params.t;
  meta["terms"] = params.terms;
  meta["smoothing"] = cfg.smoothing;
  Json rows = Json::array();
  std::string csv = "x,density\n";
  for (int k = 1; k < cfg.grid; ++k) {
    const double x = static_cast<double>(k) / cfg.grid;
    const std::string v = salem::fixed(series(x), 12);
    csv += fmt::format("{},{}\n", salem::fixed(x, 6), v);
    rows.push_back({{"x", salem::fixed(x, 6)}, {"density", v}});
  }
  Sink sink(cfg.output);
  if (cfg.format == "json") {
    meta["rows"] = rows;
    sink.out() << meta.dump(2) << "\n";
  } else {
    sink.out() << commented(meta) << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distribution of {P(theta^n)} mod 1 for Salem numbers theta"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");
    cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_minpoly = [&](CLI::App* cmd) {
    cmd->add_option("--minpoly", cfg.minpoly, "Minimal polynomial of theta")->capture_default_str();
  };
  auto add_poly = [&](CLI::App* cmd) {
    cmd->add_option("--poly", cfg.poly, "P, ascending coefficients a0,a1,... or monomial form")
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Check that a polynomial is the minimal polynomial of a Salem number");
  add_minpoly(verify);
  verify->add_option("--digits", cfg.digits, "Decimal digits for theta and omega")->check(CLI::Range(1, 1000));
  verify->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");

  auto* density = app.add_subcommand("density", "Tabulate f and f' and classify the shape of f'");
  add_minpoly(density);
  add_poly(density);
  density->add_option("--grid", cfg.grid, "Number of grid intervals on [0, 1]")->check(CLI::Range(2, 10000000));
  add_format(density);

  auto* simulate = app.add_subcommand("simulate", "Histogram of {P(theta^n)}, n <= N, against the analytic density");
  add_minpoly(simulate);
  add_poly(simulate);
  simulate->add_option("-N,--n-max", cfg.n_max, "Number of terms")->check(CLI::Range(1L, 1000000000L));
  simulate->add_option("--bins", cfg.bins, "Number of histogram bins")->check(CLI::Range(2, 1000000));
  simulate->add_option("--method", cfg.method, "exact or conjugate")->check(CLI::IsMember({"exact", "conjugate"}));
  simulate->add_flag("--cross-check", cfg.cross_check, "Also run the other method and report the largest difference");
  add_format(simulate);

  auto* table1 = app.add_subcommand("table1", "Recompute the cubic shape table and compare with the published one");
  add_format(table1);

  auto* bessel = app.add_subcommand("bessel", "Tabulate the Bessel-series density");
  bessel->add_option("--t", cfg.t, "Half the degree of the Salem number")->check(CLI::Range(2, 1000));
  bessel->add_option("--terms", cfg.terms, "Series terms")->check(CLI::Range(1, 100000000));
  bessel->add_option("--smoothing", cfg.smoothing, "cesaro or none")->check(CLI::IsMember({"cesaro", "none"}));
  bessel->add_option("--grid", cfg.grid, "Number of grid intervals on [0, 1]")->check(CLI::Range(2, 10000000));
  add_format(bessel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kValidationFailure;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*density) return cmd_density(cfg);
    if (*simulate) return cmd_simulate(cfg);
    if (*table1) return cmd_table1(cfg);
    if (*bessel) return cmd_bessel(cfg);
  } catch (const salem::PrecisionCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const salem::AsymptoteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const salem::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const salem::DegreeMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ValidationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
  return 0;
}
