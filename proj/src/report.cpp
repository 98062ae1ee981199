#include "salem/report.hpp"

#include <cstdio>

namespace salem {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string out(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') out.erase(0, 1);
  return out;
}

namespace {

Json decimals(const std::vector<double>& values, int digits) {
  Json out = Json::array();
  for (double v : values) out.push_back(fixed(v, digits));
  return out;
}

}  // namespace

Json salem_json(const SalemNumber& s, int digits) {
  Json out;
  out["salem"] = true;
  out["minpoly"] = s.minpoly().to_string();
  Json coeffs = Json::array();
  for (const auto& c : s.minpoly().coeffs()) coeffs.push_back(c.get_si());
  out["coefficients"] = coeffs;
  out["degree"] = s.degree();
  out["precision_bits"] = s.precision_bits();
  out["theta"] = s.theta().to_decimal(digits);
  Json omegas = Json::array();
  for (const auto& w : s.omegas()) omegas.push_back(w.to_decimal(digits));
  out["omegas"] = omegas;
  return out;
}

Json rejection_json(const SalemVerdict& verdict) {
  Json out;
  out["salem"] = false;
  out["reason"] = std::string(to_string(*verdict.rejection));
  out["detail"] = verdict.detail;
  return out;
}

Json shape_json(const ShapeReport& shape) {
  Json out;
  out["A"] = decimals(shape.A, 6);
  out["B"] = decimals(shape.B, 6);
  out["S"] = decimals(shape.S, 6);
  out["partition"] = decimals(shape.partition, 6);
  out["shape"] = shape.shape;
  Json points = Json::array();
  for (const auto& pt : shape.points) {
    Json p;
    p["w"] = fixed(pt.w.get_d(), 6);
    p["value"] = fixed(pt.value.get_d(), 6);
    p["kind"] = std::string(to_string(pt.kind));
    points.push_back(p);
  }
  out["critical_points"] = points;
  out["asymptotes"] = {{"left", decimals(shape.asymptotes_left, 6)}, {"right", decimals(shape.asymptotes_right, 6)}};
  return out;
}

}  // namespace salem
