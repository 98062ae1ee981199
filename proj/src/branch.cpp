#include "salem/branch.hpp"

#include "salem/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace salem {

CriticalPartition critical_partition(const QForm& q) {
  if (q.degree() < 1) throw std::invalid_argument("critical_partition: constant Q");
  CriticalPartition out;
  const IntPolynomial slope = q.inner().derivative();
  const mpq_class lo(-1), hi(1);
  if (slope.degree() >= 1) {
    for (auto root : isolate_real_roots(slope)) {
      root = root.separated_from(lo).separated_from(hi).refined(kCriticalBits);
      CriticalPoint cp{root.midpoint(), 0, root.multiplicity};
      cp.value = q.exact(cp.x);
      out.all.push_back(cp);
      if (root.exact() && (root.lo == lo || root.lo == hi)) continue;
      if (root.hi <= lo || root.lo >= hi) continue;
      (cp.turning() ? out.turning : out.stationary).push_back(cp);
    }
  }
  out.points.push_back(lo);
  for (const auto& cp : out.turning) out.points.push_back(cp.x);
  out.points.push_back(hi);
  return out;
}

std::vector<Branch> branches(const QForm& q) { return branches(q, critical_partition(q)); }

std::vector<Branch> branches(const QForm& q, const CriticalPartition& partition) {
  const IntPolynomial slope = q.polynomial().derivative();
  std::vector<Branch> out;
  for (std::size_t i = 0; i + 1 < partition.points.size(); ++i) {
    Branch b;
    b.k = static_cast<int>(i) + 1;
    b.x_lo = partition.points[i];
    b.x_hi = partition.points[i + 1];
    // Q' has constant sign on the open piece apart from stationary points;
    // probe until a nonzero sign turns up.
    mpq_class probe = (b.x_lo + b.x_hi) / 2;
    int s = slope.sign_at(probe);
    while (s == 0) {
      probe = (probe + b.x_hi) / 2;
      s = slope.sign_at(probe);
    }
    b.increasing = s > 0;
    mpq_class at_lo = q.exact(b.x_lo), at_hi = q.exact(b.x_hi);
    b.alpha = b.increasing ? at_lo : at_hi;
    b.beta = b.increasing ? at_hi : at_lo;
    out.push_back(std::move(b));
  }
  return out;
}

double invert_on_branch(const Branch& b, const QForm& q, double y) {
  const double alpha = b.alpha_d(), beta = b.beta_d();
  if (!(y >= alpha && y <= beta)) throw OutOfRangeError("invert_on_branch: value outside [alpha, beta]");
  // endpoints map exactly
  if (y == alpha) return b.increasing ? b.lo() : b.hi();
  if (y == beta) return b.increasing ? b.hi() : b.lo();

  long double a = b.lo(), c = b.hi();
  const long double target = y;
  // h(x) = Q(x) - y is negative at the left end of an increasing branch.
  const long double orient = b.increasing ? 1.0L : -1.0L;
  const double share = b.increasing ? (y - alpha) / (beta - alpha) : (beta - y) / (beta - alpha);
  long double x = a + (c - a) * share;
  long double step_prev = c - a;
  for (int iter = 0; iter < 300; ++iter) {
    long double h = (q(x) - target) * orient;
    if (h == 0) return static_cast<double>(x);
    if (h < 0)
      a = x;
    else
      c = x;
    if (c - a <= 4 * std::numeric_limits<long double>::epsilon() * std::max(1.0L, std::fabs(x))) break;
    long double d = q.derivative(x) * orient;
    long double next = d > 0 ? x - h / d : a - 1;
    long double step = std::fabs(next - x);
    if (!(next > a && next < c) || step > 0.5L * step_prev) {
      next = 0.5L * (a + c);
      step = 0.5L * (c - a);
    }
    step_prev = step;
    if (next == x) break;
    x = next;
  }
  return static_cast<double>(x);
}

double s_k(const Branch& b, const QForm& q, double y) {
  const double clamped = std::clamp(y, b.alpha_d(), b.beta_d());
  const double inv = invert_on_branch(b, q, clamped);
  return b.increasing ? -inv : inv;
}

}  // namespace salem
