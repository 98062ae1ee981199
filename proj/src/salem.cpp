#include "salem/salem.hpp"

#include "salem/factor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace salem {

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::NotMonic:
      return "NotMonic";
    case Rejection::OddOrSmallDegree:
      return "OddOrSmallDegree";
    case Rejection::Reducible:
      return "Reducible";
    case Rejection::NotReciprocal:
      return "NotReciprocal";
    case Rejection::RootPatternMismatch:
      return "RootPatternMismatch";
  }
  return "Unknown";
}

SalemRejectionError::SalemRejectionError(Rejection reason, const std::string& detail)
    : std::runtime_error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}

namespace {

void horner(BigFloat& value, BigFloat& slope, const IntPolynomial& p, const BigFloat& x) {
  mpfr_set_zero(value.get(), 1);
  mpfr_set_zero(slope.get(), 1);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    mpfr_mul(slope.get(), slope.get(), x.get(), MPFR_RNDN);
    mpfr_add(slope.get(), slope.get(), value.get(), MPFR_RNDN);
    mpfr_mul(value.get(), value.get(), x.get(), MPFR_RNDN);
    mpfr_add_z(value.get(), value.get(), it->get_mpz_t(), MPFR_RNDN);
  }
}

BigFloat omega_from_trace_root(const RealRoot& y, long bits) {
  const mpfr_prec_t prec = bits + 32;
  BigFloat v = BigFloat::from(y.midpoint(), prec);
  mpfr_div_ui(v.get(), v.get(), 2, MPFR_RNDN);
  mpfr_acos(v.get(), v.get(), MPFR_RNDN);
  BigFloat two_pi(prec);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
  mpfr_div(v.get(), v.get(), two_pi.get(), MPFR_RNDN);
  return v;
}

// Refine a trace root until omega = acos(y/2)/(2 pi) is pinned to 2^-(bits+2).
RealRoot refine_trace_root(const RealRoot& y, long bits) {
  RealRoot r = y.refined(bits + 8);
  while (true) {
    double edge = std::max(std::fabs(r.lo.get_d()), std::fabs(r.hi.get_d())) / 2;
    double slope_floor = std::sqrt(std::max(0.0, 1 - edge * edge));
    double bound = r.width().get_d() / (4 * M_PI * std::max(slope_floor, 1e-300));
    if (r.exact() || bound <= std::ldexp(1.0, static_cast<int>(-(bits + 2)))) return r;
    r = r.refined(static_cast<long>(-std::log2(r.width().get_d())) + 4);
  }
}

}  // namespace

SalemNumber build_salem(const IntPolynomial& minpoly, const RealRoot& theta_root, const std::vector<RealRoot>& trace,
                        long bits) {
  SalemNumber s;
  s.minpoly_ = minpoly;
  s.bits_ = bits;
  s.theta_root_ = theta_root.refined(bits);
  long int_bits = static_cast<long>(mpz_sizeinbase(s.theta_root_.hi.get_num_mpz_t(), 2));
  s.theta_ = BigFloat::from(s.theta_root_.lo, bits + int_bits + 8);

  std::vector<RealRoot> refined;
  for (const auto& y : trace) refined.push_back(refine_trace_root(y, bits));
  // omega ascending <=> y = 2 cos(2 pi omega) descending
  std::sort(refined.begin(), refined.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo > b.lo; });
  for (const auto& y : refined) s.omegas_.push_back(omega_from_trace_root(y, bits));
  s.trace_roots_ = std::move(refined);
  return s;
}

BigFloat SalemNumber::theta_with_bits(long bits) const {
  const mpfr_prec_t target = bits + 64;
  BigFloat x = BigFloat::from(theta_root_.midpoint(), std::max<mpfr_prec_t>(target, 192));
  if (bits <= bits_) return x;
  mpfr_prec_t prec = std::max<mpfr_prec_t>(bits_, 64);
  bool last = false;
  while (true) {
    prec = std::min<mpfr_prec_t>(2 * prec, target);
    BigFloat xp(prec);
    mpfr_set(xp.get(), x.get(), MPFR_RNDN);
    BigFloat value(prec), slope(prec);
    horner(value, slope, minpoly_, xp);
    mpfr_div(value.get(), value.get(), slope.get(), MPFR_RNDN);
    mpfr_sub(xp.get(), xp.get(), value.get(), MPFR_RNDN);
    BigFloat next(target);
    mpfr_set(next.get(), xp.get(), MPFR_RNDN);
    x = std::move(next);
    if (last) break;
    if (prec == target) last = true;
  }
  return x;
}

IntPolynomial trace_polynomial(const IntPolynomial& p) {
  if (p.degree() % 2 != 0 || !p.is_palindromic())
    throw std::invalid_argument("trace_polynomial: expected an even-degree reciprocal polynomial");
  const int t = p.degree() / 2;
  // D_k(y) = x^k + x^-k as a polynomial in y = x + 1/x.
  IntPolynomial d_prev{2};
  IntPolynomial d_cur{0, 1};
  IntPolynomial r(std::vector<mpz_class>{p.coeff(t)});
  const IntPolynomial y{0, 1};
  for (int k = 1; k <= t; ++k) {
    r = r + p.coeff(t + k) * d_cur;
    IntPolynomial d_next = y * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return r;
}

SalemVerdict verify_salem(const IntPolynomial& minpoly, long bits) {
  SalemVerdict verdict;
  auto reject = [&](Rejection r, std::string detail) {
    verdict.rejection = r;
    verdict.detail = std::move(detail);
    return verdict;
  };
  if (minpoly.is_zero()) return reject(Rejection::NotMonic, "zero polynomial");
  if (!minpoly.is_monic()) return reject(Rejection::NotMonic, "leading coefficient " + minpoly.leading().get_str());
  const int n = minpoly.degree();
  if (n % 2 != 0 || n < 4) return reject(Rejection::OddOrSmallDegree, "degree " + std::to_string(n));
  if (auto f = find_factor(minpoly))
    return reject(Rejection::Reducible, "divisible by " + f->to_string());
  if (!minpoly.is_palindromic()) return reject(Rejection::NotReciprocal, "coefficients " + minpoly.to_csv());

  const mpq_class one(1);
  auto real_roots = isolate_real_roots(minpoly);
  std::vector<RealRoot> above_one, inside;
  for (auto& r : real_roots) {
    r = r.separated_from(one).separated_from(mpq_class(0));
    if (r.lo >= one)
      above_one.push_back(r);
    else if (r.lo >= 0 && r.hi <= one)
      inside.push_back(r);
  }
  if (real_roots.size() != 2 || above_one.size() != 1 || inside.size() != 1)
    return reject(Rejection::RootPatternMismatch,
                  std::to_string(real_roots.size()) + " real roots, " + std::to_string(above_one.size()) +
                      " above 1, " + std::to_string(inside.size()) + " in (0,1)");

  const int t = n / 2;
  const mpq_class two(2), minus_two(-2);
  auto trace_roots = isolate_real_roots(trace_polynomial(minpoly));
  std::vector<RealRoot> on_circle;
  int beyond = 0;
  for (auto& y : trace_roots) {
    y = y.separated_from(two).separated_from(minus_two);
    if (y.exact() && (y.lo == two || y.lo == minus_two)) continue;
    if (y.lo >= minus_two && y.hi <= two)
      on_circle.push_back(y);
    else if (y.lo >= two)
      ++beyond;
  }
  if (static_cast<int>(trace_roots.size()) != t || beyond != 1 || static_cast<int>(on_circle.size()) != t - 1)
    return reject(Rejection::RootPatternMismatch,
                  std::to_string(on_circle.size()) + " conjugate pairs on the unit circle, expected " +
                      std::to_string(t - 1));

  verdict.salem = build_salem(minpoly, above_one.front(), on_circle, bits);
  return verdict;
}

SalemNumber require_salem(const IntPolynomial& minpoly, long bits) {
  auto verdict = verify_salem(minpoly, bits);
  if (!verdict.ok()) throw SalemRejectionError(*verdict.rejection, verdict.detail);
  return *verdict.salem;
}

SalemNumber refine_theta(const SalemNumber& s, long bits) {
  if (bits < 32) throw std::invalid_argument("refine_theta: bits must be at least 32");
  return build_salem(s.minpoly(), s.theta_bracket(), s.trace_roots(), std::max(bits, s.precision_bits()));
}

IntPolynomial salem_power_minpoly(const SalemNumber& s, int m) {
  if (m < 1) throw std::invalid_argument("salem_power_minpoly: m must be positive");
  const IntPolynomial& f = s.minpoly();
  const int n = f.degree();
  // Monic f = x^n + c_{n-1} x^{n-1} + ... ; power sums p_k of its roots.
  std::vector<mpz_class> p(static_cast<std::size_t>(n * m) + 1, 0);
  for (int k = 1; k <= n * m; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i < k && i <= n; ++i) acc += f.coeff(n - i) * p[static_cast<std::size_t>(k - i)];
    if (k <= n) acc += k * f.coeff(n - k);
    p[static_cast<std::size_t>(k)] = -acc;
  }
  // Power sums of theta^m and its conjugates, back to coefficients.
  std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1, 0);
  d[static_cast<std::size_t>(n)] = 1;
  for (int k = 1; k <= n; ++k) {
    mpz_class acc = p[static_cast<std::size_t>(k * m)];
    for (int i = 1; i < k; ++i) acc += d[static_cast<std::size_t>(n - i)] * p[static_cast<std::size_t>((k - i) * m)];
    if (acc % k != 0) throw std::logic_error("salem_power_minpoly: non-integral Newton step");
    d[static_cast<std::size_t>(n - k)] = -acc / k;
  }
  return IntPolynomial(std::move(d));
}

SalemNumber load_salem_fixture(const std::string& name) {
  std::string path = std::string(SALEM_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return require_salem(parse_poly(line));
  }
  throw std::runtime_error("fixture " + path + " has no polynomial");
}

}  // namespace salem
