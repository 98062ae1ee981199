#include "salem/shape.hpp"

#include <algorithm>
#include <cmath>

namespace salem {

std::string_view to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::Minimum:
      return "min";
    case ExtremumKind::Maximum:
      return "max";
    case ExtremumKind::Stationary:
      return "stationary";
  }
  return "?";
}

bool contains(const std::vector<double>& set, double v) {
  return std::any_of(set.begin(), set.end(), [v](double s) { return std::fabs(s - v) < kMembershipTolerance; });
}

namespace {

void add_value(std::vector<double>& set, const mpq_class& value) {
  const double f = fractional_part(value);
  auto put = [&set](double v) {
    if (!contains(set, v)) set.push_back(v);
  };
  if (f < kMembershipTolerance || f > 1 - kMembershipTolerance) {
    put(0.0);
    put(1.0);
  } else {
    put(f);
  }
}

// Sign of the first nonvanishing derivative of q at w, with its order.
std::pair<int, int> leading_sign(const IntPolynomial& q, const mpq_class& w) {
  IntPolynomial d = q;
  for (int r = 0; !d.is_zero(); ++r) {
    if (r > 0) {
      int s = d.sign_at(w);
      if (s != 0) return {s, r};
    }
    d = d.derivative();
  }
  return {0, 0};
}

// t = 0 corresponds to w = 1 and w = 1 - t^2/2 + ...; t = pi to w = -1 + (t - pi)^2/2.
ExtremumKind endpoint_kind(const IntPolynomial& q, const mpq_class& w) {
  auto [s, r] = leading_sign(q, w);
  if (w > 0 && r % 2 == 1) s = -s;
  return s > 0 ? ExtremumKind::Minimum : ExtremumKind::Maximum;
}

}  // namespace

ShapeReport shape_classify(const DensityModel& model) {
  ShapeReport out;
  const QForm& q = model.q();
  const IntPolynomial poly = q.polynomial();
  const auto& part = model.partition();

  out.points.push_back({mpq_class(1), q.exact(1), endpoint_kind(poly, mpq_class(1))});
  out.points.push_back({mpq_class(-1), q.exact(-1), endpoint_kind(poly, mpq_class(-1))});
  // A turning point closes branch k and opens k + 1: a maximum if branch k rises.
  const auto& br = model.branches();
  for (std::size_t i = 0; i < part.turning.size(); ++i) {
    const auto& cp = part.turning[i];
    out.points.push_back({cp.x, cp.value, br[i].increasing ? ExtremumKind::Maximum : ExtremumKind::Minimum});
  }
  for (const auto& cp : part.stationary) out.points.push_back({cp.x, cp.value, ExtremumKind::Stationary});

  for (const auto& pt : out.points) {
    switch (pt.kind) {
      case ExtremumKind::Minimum:
        add_value(out.A, pt.value);
        break;
      case ExtremumKind::Maximum:
        add_value(out.B, pt.value);
        break;
      case ExtremumKind::Stationary:
        add_value(out.S, pt.value);
        break;
    }
  }
  std::sort(out.A.begin(), out.A.end());
  std::sort(out.B.begin(), out.B.end());
  std::sort(out.S.begin(), out.S.end());

  for (const auto* set : {&out.A, &out.B, &out.S})
    for (double v : *set)
      if (!contains(out.partition, v)) out.partition.push_back(v);
  std::sort(out.partition.begin(), out.partition.end());

  auto in_a_or_s = [&](double v) { return contains(out.A, v) || contains(out.S, v); };
  auto in_b_or_s = [&](double v) { return contains(out.B, v) || contains(out.S, v); };
  for (std::size_t i = 0; i + 1 < out.partition.size(); ++i) {
    const double lo = out.partition[i], hi = out.partition[i + 1];
    const bool left_wall = in_a_or_s(lo);
    const bool right_wall = in_b_or_s(hi);
    std::string piece;
    if (left_wall && right_wall)
      piece = "∪";
    else if (left_wall)
      piece = "⌊";
    else if (right_wall)
      piece = "⌋";
    else
      piece = "⌣";
    out.shape += piece;
    out.pieces.push_back(std::move(piece));
  }

  out.asymptotes_left = model.asymptotes().left;
  out.asymptotes_right = model.asymptotes().right;
  return out;
}

}  // namespace salem
