#include "salem/table1.hpp"

#include "salem/closed_forms.hpp"
#include "salem/shape.hpp"

#include <algorithm>
#include <cstdio>

namespace salem {

std::string two_decimals(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string out(buf);
  if (out == "-0.00") out = "0.00";
  return out;
}

const std::vector<ShapeTableRow>& published_shape_table() {
  static const std::vector<ShapeTableRow> rows = {
      {1, 1, 1, "-0.61", "0.27", "-0.11", "2.63", {"0.89", "0.00", "1.00"}, {"0.63", "0.00", "1.00"}, {}, "∪⌣∪"},
      {3, 5, 6, "-0.68", "0.12", "4.22", "10.39", {"0.22", "0.00", "1.00"}, {"0.39", "0.00", "1.00"}, {}, "⌊∪⌋"},
      {3, 3, 10, "-0.17", "-0.17", "6.11", "6.11", {"0.00", "1.00"}, {"0.00", "1.00"}, {"0.11"}, "∪∪"},
      {1, -1, -2, "-0.50", "0.83", "-5.00", "4.48", {"0.00", "1.00"}, {"0.48", "0.00", "1.00"}, {}, "∪⌋"},
      {1, 2, 3, "-0.67", "0.00", "2.82", "4.00", {"0.82", "0.00", "1.00"}, {"0.00", "1.00"}, {}, "⌊∪"},
      {1, -2, -2, "-0.39", "1.06", "-6.21", "", {"0.79"}, {"0.00", "1.00"}, {}, "⌣∪"},
      {1, 2, -2, "-1.06", "0.39", "", "6.21", {"0.00", "1.00"}, {"0.21"}, {}, "∪⌣"},
      {1, 0, 0, "-0.50", "0.50", "-2.00", "2.00", {"0.00", "1.00"}, {"0.00", "1.00"}, {}, "∪"},
      {1, 1, 4, "", "", "", "", {"0.00", "1.00"}, {"0.00", "1.00"}, {}, "∪"},
  };
  return rows;
}

namespace {

std::vector<std::string> rendered(const std::vector<double>& set) {
  std::vector<std::string> out;
  for (double v : set) out.push_back(two_decimals(v));
  return out;
}

std::string q_at(const QForm& q, double x) {
  if (x < -1 || x > 1) return "";
  return two_decimals(static_cast<double>(q(x)));
}

bool same_set(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

}  // namespace

ShapeTableRow compute_shape_row(long a3, long a2, long a1) {
  ShapeTableRow row;
  row.a3 = a3;
  row.a2 = a2;
  row.a1 = a1;
  const IntPolynomial p{0, a1, a2, a3};
  const DensityModel model(p);
  if (auto crit = cubic_criticals(a3, a2, a1)) {
    row.x1 = two_decimals(crit->first);
    row.x2 = two_decimals(crit->second);
    row.q1 = q_at(model.q(), crit->first);
    row.q2 = q_at(model.q(), crit->second);
  }
  const ShapeReport shape = shape_classify(model);
  row.A = rendered(shape.A);
  row.B = rendered(shape.B);
  row.S = rendered(shape.S);
  row.shape = shape.shape;
  return row;
}

std::vector<std::string> row_differences(const ShapeTableRow& expected, const ShapeTableRow& actual) {
  std::vector<std::string> out;
  if (expected.x1 != actual.x1) out.push_back("x1");
  if (expected.x2 != actual.x2) out.push_back("x2");
  if (expected.q1 != actual.q1) out.push_back("Q(x1)");
  if (expected.q2 != actual.q2) out.push_back("Q(x2)");
  if (!same_set(expected.A, actual.A)) out.push_back("A");
  if (!same_set(expected.B, actual.B)) out.push_back("B");
  if (!same_set(expected.S, actual.S)) out.push_back("S");
  if (expected.shape != actual.shape) out.push_back("shape");
  return out;
}

}  // namespace salem
