#include "salem/factor.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace salem {

namespace {

using Complex = std::complex<long double>;

Complex eval(const std::vector<long double>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Aberth-Ehrlich simultaneous iteration, then a Newton polish per root.
std::vector<Complex> complex_roots(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<long double> c;
  for (const auto& v : p.coeffs()) c.push_back(static_cast<long double>(v.get_d()));
  std::vector<long double> dc;
  for (int j = 1; j <= n; ++j) dc.push_back(c[static_cast<std::size_t>(j)] * j);

  long double radius = 0;
  for (int j = 0; j < n; ++j) radius = std::max(radius, std::fabs(c[static_cast<std::size_t>(j)] / c.back()));
  radius = 1 + radius;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double angle = 2 * M_PIl * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, angle);
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex ratio = eval(c, z[k]) / eval(dc, z[k]);
      Complex repulsion = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      Complex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (max_step < 1e-19L) break;
  }
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      Complex d = eval(dc, r);
      if (std::abs(d) == 0) break;
      r -= eval(c, r) / d;
    }
  }
  return z;
}

std::optional<IntPolynomial> candidate_from(const std::vector<Complex>& roots, const std::vector<int>& pick,
                                            const mpz_class& lead) {
  std::vector<Complex> prod{1};
  for (int idx : pick) {
    std::vector<Complex> next(prod.size() + 1, 0);
    for (std::size_t j = 0; j < prod.size(); ++j) {
      next[j + 1] += prod[j];
      next[j] -= prod[j] * roots[static_cast<std::size_t>(idx)];
    }
    prod = std::move(next);
  }
  const long double scale = static_cast<long double>(lead.get_d());
  std::vector<mpz_class> coeffs;
  for (const auto& v : prod) {
    Complex w = v * scale;
    long double rounded = std::round(w.real());
    long double tol = 1e-6L * std::max(1.0L, std::fabs(w.real()));
    if (std::fabs(w.imag()) > tol || std::fabs(w.real() - rounded) > tol) return std::nullopt;
    if (std::fabs(rounded) > 1e18L) return std::nullopt;
    coeffs.emplace_back(static_cast<long>(rounded));
  }
  IntPolynomial g = IntPolynomial(std::move(coeffs)).primitive_part();
  if (g.degree() < 1) return std::nullopt;
  return g;
}

// Iterate over all k-subsets of {0..n-1}; stop early when visit returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::optional<IntPolynomial> find_factor(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 2) return std::nullopt;
  if (n > 16) throw std::domain_error("find_factor: degree above 16 is not supported");

  IntPolynomial prim = p.primitive_part();
  IntPolynomial g = gcd(prim, prim.derivative());
  if (g.degree() >= 1) return g;
  if (prim.coeff(0) == 0) return IntPolynomial{0, 1};

  const auto roots = complex_roots(prim);
  std::optional<IntPolynomial> found;
  for (int k = 1; k <= n / 2 && !found; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& pick) {
      auto cand = candidate_from(roots, pick, prim.leading());
      if (cand && divide_exact(prim, *cand)) {
        found = cand;
        return true;
      }
      return false;
    });
  }
  return found;
}

}  // namespace salem
