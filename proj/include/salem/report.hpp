#pragma once

#include "salem/salem.hpp"
#include "salem/shape.hpp"

#include <json.hpp>

namespace salem {

using Json = nlohmann::ordered_json;

/// Fixed-decimal rendering of x, so printed output is reproducible.
std::string fixed(double x, int digits);

Json salem_json(const SalemNumber& s, int digits);
Json rejection_json(const SalemVerdict& verdict);
Json shape_json(const ShapeReport& shape);

}  // namespace salem
