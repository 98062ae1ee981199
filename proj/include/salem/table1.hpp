#pragma once

#include <optional>
#include <string>
#include <vector>

namespace salem {

/// One row of the cubic shape table for P = a3 x^3 + a2 x^2 + a1 x.
/// Numbers are kept as printed, to 2 decimals; an absent entry (critical
/// point not real, or outside [-1, 1]) is an empty string.
struct ShapeTableRow {
  long a3 = 0, a2 = 0, a1 = 0;
  std::string x1, x2, q1, q2;
  std::vector<std::string> A, B, S;
  std::string shape;
};

/// The nine rows as published.
const std::vector<ShapeTableRow>& published_shape_table();

/// Recomputes a row from (a3, a2, a1).
ShapeTableRow compute_shape_row(long a3, long a2, long a1);

/// Names of the fields on which the rows differ (sets compared as sets).
std::vector<std::string> row_differences(const ShapeTableRow& expected, const ShapeTableRow& actual);

/// Two-decimal rendering with "-0.00" folded to "0.00".
std::string two_decimals(double x);

}  // namespace salem
