#include "salem/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace salem {

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

IntPolynomial to_primitive_int(RatPoly p) {
  trim(p);
  if (p.empty()) return {};
  mpz_class den = 1;
  for (auto& c : p) {
    c.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(p.size());
  for (const auto& c : p) {
    mpq_class scaled = c * den;
    out.push_back(scaled.get_num());
  }
  return IntPolynomial(std::move(out)).primitive_part();
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<long>(j));
  trim(d);
  return d;
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim(a);
  return a;
}

// a = q*b + r over Q.
std::pair<RatPoly, RatPoly> rat_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rat_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

RatPoly rat_div_exact(const RatPoly& a, const RatPoly& b) {
  return rat_divmod(a, b).first;
}

bool is_constant(const RatPoly& p) { return p.size() <= 1; }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int power) {
  std::vector<mpz_class> v(static_cast<std::size_t>(power) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d.push_back(coeffs_[j] * static_cast<unsigned long>(j));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::without_constant() const {
  auto c = coeffs_;
  if (!c.empty()) c[0] = 0;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reflected() const {
  auto c = coeffs_;
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  // Horner on the numerator of p(n/d) * d^deg to stay in integers.
  if (is_zero()) return 0;
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it * dpow;
    dpow *= d;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(degree()));
  mpq_class r(acc, den);
  r.canonicalize();
  return r;
}

long double IntPolynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  return sgn(eval(x));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  auto c = a.coeffs_;
  if (c.size() < b.coeffs_.size()) c.resize(b.coeffs_.size(), 0);
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& p) {
  auto c = p.coeffs_;
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p) {
  auto c = p.coeffs_;
  for (auto& v : c) v *= s;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (mag != 1 || j == 0) os << mag.get_str();
    if (j >= 1) os << 'x';
    if (j >= 2) os << '^' << j;
    first = false;
  }
  return os.str();
}

std::string IntPolynomial::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].get_str();
  }
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return s;
}

mpz_class parse_integer(const std::string& token, std::string_view context) {
  std::string digits = token;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  if (digits.empty()) throw ParseError("empty coefficient in '" + std::string(context) + "'");
  for (char ch : digits) {
    if (ch == '.' || ch == 'e' || ch == 'E' || ch == '/')
      throw ParseError("non-integer coefficient '" + token + "'");
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("malformed token '" + token + "'");
  }
  mpz_class v(digits, 10);
  return negative ? mpz_class(-v) : v;
}

IntPolynomial parse_coefficient_list(const std::string& s) {
  std::vector<mpz_class> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string token = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coeffs.push_back(parse_integer(token, s));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial parse_monomial_form(const std::string& s) {
  std::map<int, mpz_class> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    // a sign directly after '^' belongs to the exponent, which we reject below
    std::string term = s.substr(pos, end - pos);
    pos = end;

    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw ParseError("dangling sign in '" + s + "'");

    std::size_t x_at = term.find('x');
    mpz_class coeff = 1;
    int power = 0;
    if (x_at == std::string::npos) {
      coeff = parse_integer(term, s);
    } else {
      std::string head = term.substr(0, x_at);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coeff = parse_integer(head, s);
      std::string tail = term.substr(x_at + 1);
      if (tail.empty()) {
        power = 1;
      } else {
        if (tail[0] != '^' || tail.size() < 2) throw ParseError("malformed token '" + term + "'");
        std::string exponent = tail.substr(1);
        for (char ch : exponent)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("malformed exponent '" + exponent + "'");
        if (exponent.size() > 4) throw ParseError("exponent too large '" + exponent + "'");
        power = std::stoi(exponent);
      }
    }
    terms[power] += negative ? mpz_class(-coeff) : coeff;
  }
  if (terms.empty()) throw ParseError("empty polynomial");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
  for (const auto& [power, c] : terms) coeffs[static_cast<std::size_t>(power)] = c;
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_poly(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  IntPolynomial p = s.find('x') != std::string::npos ? parse_monomial_form(s) : parse_coefficient_list(s);
  if (p.is_zero()) throw ParseError("zero polynomial");
  return p;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = rat_divmod(to_rat(a), to_rat(b));
  if (!r.empty()) return std::nullopt;
  std::vector<mpz_class> out;
  for (auto& c : q) {
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return to_primitive_int(rat_gcd(to_rat(a), to_rat(b)));
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm over Q.
  RatPoly a = to_rat(p);
  RatPoly b = rat_derivative(a);
  RatPoly c = rat_gcd(a, b);
  RatPoly w = rat_div_exact(a, c);
  RatPoly y = rat_div_exact(b, c);
  RatPoly z = rat_sub(y, rat_derivative(w));
  int multiplicity = 1;
  while (!is_constant(w)) {
    RatPoly g = rat_gcd(w, z);
    if (!is_constant(g)) out.emplace_back(to_primitive_int(g), multiplicity);
    w = rat_div_exact(w, g);
    y = rat_div_exact(z, g);
    z = rat_sub(y, rat_derivative(w));
    ++multiplicity;
  }
  return out;
}

}  // namespace salem
