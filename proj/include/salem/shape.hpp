#pragma once

#include "salem/density.hpp"

#include <string>
#include <vector>

namespace salem {

enum class ExtremumKind { Minimum, Maximum, Stationary };

std::string_view to_string(ExtremumKind kind);

/// A critical point of t -> Q(cos t), recorded by w = cos t.
struct ShapePoint {
  mpq_class w;
  mpq_class value;
  ExtremumKind kind;
};

struct ShapeReport {
  std::vector<ShapePoint> points;
  /// Fractional parts of Q at minima, maxima and stationary inflections.
  /// A fractional part 0 always comes with 1 and vice versa.
  std::vector<double> A, B, S;
  /// Sorted union of A, B, S: 0 = x_0 < ... < x_r = 1.
  std::vector<double> partition;
  /// One symbol per (x_i, x_{i+1}): "∪", "⌊", "⌋" or "⌣".
  std::vector<std::string> pieces;
  std::string shape;
  std::vector<double> asymptotes_left, asymptotes_right;
};

/// Applies the sketching rules to the critical points of Q(cos t).
ShapeReport shape_classify(const DensityModel& model);

/// True when v is in `set` up to kMembershipTolerance.
bool contains(const std::vector<double>& set, double v);

}  // namespace salem
