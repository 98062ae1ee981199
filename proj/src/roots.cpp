#include "salem/roots.hpp"

#include <algorithm>

namespace salem {

namespace {

using Coeffs = std::vector<mpz_class>;

// In-place Taylor shift h(x) -> h(x + 1).
void taylor_shift_one(Coeffs& h) {
  const std::size_t n = h.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 2; j + 1 > i; --j) h[j] += h[j + 1];
}

// Upper bound on the number of roots of h in (0, 1).
int descartes_unit_bound(const Coeffs& h) {
  Coeffs r(h.rbegin(), h.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

// h(x) -> 2^n h(x / 2), keeping integer coefficients.
Coeffs halve_argument(const Coeffs& h) {
  const std::size_t n = h.size() - 1;
  Coeffs out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) mpz_mul_2exp(out[i].get_mpz_t(), h[i].get_mpz_t(), n - i);
  return out;
}

// Synthetic division by (x - r) for integer r; assumes r is a root.
Coeffs deflate(const Coeffs& h, long r) {
  Coeffs q(h.size() - 1);
  mpz_class carry = 0;
  for (std::size_t j = h.size() - 1; j >= 1; --j) {
    carry = h[j] + carry * r;
    q[j - 1] = carry;
  }
  return q;
}

struct UnitInterval {
  mpz_class c;  // interval (c / 2^k, (c + 1) / 2^k) of the scaled polynomial
  unsigned long k;
  bool exact;
};

// Roots of the square-free integer polynomial g in (0, 1).
std::vector<UnitInterval> unit_roots(const Coeffs& g) {
  std::vector<UnitInterval> found;
  struct Task {
    Coeffs h;
    mpz_class c;
    unsigned long k;
  };
  std::vector<Task> stack{{g, 0, 0}};
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (task.h.size() < 2) continue;
    int v = descartes_unit_bound(task.h);
    if (v == 0) continue;
    if (v == 1) {
      found.push_back({task.c, task.k, false});
      continue;
    }
    Coeffs left = halve_argument(task.h);
    Coeffs right = left;
    taylor_shift_one(right);
    mpz_class c2 = task.c * 2;
    if (right[0] == 0) {
      found.push_back({c2 + 1, task.k + 1, true});
      right.erase(right.begin());
      left = deflate(left, 1);
    }
    stack.push_back({std::move(right), c2 + 1, task.k + 1});
    stack.push_back({std::move(left), c2, task.k + 1});
  }
  return found;
}

// Positive roots of square-free f, as RealRoots of `factor`.
std::vector<RealRoot> positive_roots(const IntPolynomial& f, const IntPolynomial& factor, bool negate, int mult) {
  // Cauchy bound: every root satisfies |r| < 1 + max |a_i / a_n| <= 2^bound_bits.
  const auto& a = f.coeffs();
  mpz_class lead = abs(f.leading());
  mpz_class max_ratio = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    mpz_class q = (abs(a[i]) + lead - 1) / lead;
    if (q > max_ratio) max_ratio = q;
  }
  mpz_class bound = max_ratio + 1;
  unsigned long bound_bits = mpz_sizeinbase(bound.get_mpz_t(), 2);

  Coeffs g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_mul_2exp(g[i].get_mpz_t(), a[i].get_mpz_t(), bound_bits * i);

  std::vector<RealRoot> out;
  for (const auto& u : unit_roots(g)) {
    // Scaled interval (c/2^k, (c+1)/2^k) maps to (c, c+1) * 2^(bound_bits - k).
    mpq_class lo(u.c), hi(u.c + 1);
    if (bound_bits >= u.k) {
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, bound_bits - u.k);
      lo *= scale;
      hi *= scale;
    } else {
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, u.k - bound_bits);
      lo /= scale;
      hi /= scale;
    }
    if (u.exact) hi = lo;
    if (negate) {
      mpq_class nlo = -hi, nhi = -lo;
      lo = nlo;
      hi = nhi;
    }
    out.push_back({factor, lo, hi, mult});
  }
  return out;
}

std::vector<RealRoot> roots_of_square_free(const IntPolynomial& f, int mult) {
  std::vector<RealRoot> out;
  if (f.degree() == 1) {
    mpq_class root(-f.coeff(0), f.coeff(1));
    root.canonicalize();
    out.push_back({f, root, root, mult});
    return out;
  }
  IntPolynomial h = f;
  if (h.coeff(0) == 0) {
    out.push_back({f, 0, 0, mult});
    h = *divide_exact(h, IntPolynomial{0, 1});
  }
  if (h.degree() >= 1) {
    auto pos = positive_roots(h, f, false, mult);
    auto neg = positive_roots(h.reflected(), f, true, mult);
    out.insert(out.end(), pos.begin(), pos.end());
    out.insert(out.end(), neg.begin(), neg.end());
  }
  return out;
}

// Sign of the square-free polynomial f just to the right of x. When x is
// itself a (necessarily simple) root this is the sign of f'(x).
int sign_right_of(const IntPolynomial& f, const mpq_class& x) {
  int s = f.sign_at(x);
  return s != 0 ? s : f.derivative().sign_at(x);
}

// One bisection step; `sign_lo` is the sign of the factor on (lo, root).
void bisect(RealRoot& r, int sign_lo) {
  mpq_class mid = r.midpoint();
  int s = r.factor.sign_at(mid);
  if (s == 0)
    r.lo = r.hi = mid;
  else if (s == sign_lo)
    r.lo = mid;
  else
    r.hi = mid;
}

}  // namespace

int sign_variations(const std::vector<mpz_class>& coeffs) {
  int count = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

RealRoot RealRoot::refined(long bits) const {
  RealRoot r = *this;
  mpq_class target(1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  target /= den;
  if (r.exact()) return r;
  const int sign_lo = sign_right_of(r.factor, r.lo);
  while (!r.exact() && r.width() > target) bisect(r, sign_lo);
  return r;
}

RealRoot RealRoot::separated_from(const mpq_class& point) const {
  RealRoot r = *this;
  if (r.factor.sign_at(point) == 0 && r.lo <= point && point <= r.hi) {
    r.lo = r.hi = point;
    return r;
  }
  if (r.exact()) return r;
  const int sign_lo = sign_right_of(r.factor, r.lo);
  while (!r.exact() && r.lo < point && point < r.hi) bisect(r, sign_lo);
  return r;
}

std::vector<RealRoot> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RealRoot> roots;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    auto part = roots_of_square_free(factor, mult);
    roots.insert(roots.end(), part.begin(), part.end());
  }
  // Roots of different square-free factors are distinct; shrink until the
  // intervals no longer overlap.
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      RealRoot& a = roots[i];
      RealRoot& b = roots[i + 1];
      if (a.hi < b.lo) continue;
      RealRoot& wider = (!a.exact() && (b.exact() || a.width() >= b.width())) ? a : b;
      bisect(wider, sign_right_of(wider.factor, wider.lo));
      changed = true;
    }
    if (changed)
      std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  }
  return roots;
}

}  // namespace salem
