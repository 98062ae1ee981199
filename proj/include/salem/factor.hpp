#pragma once

#include "salem/int_poly.hpp"

#include <optional>

namespace salem {

/// A nontrivial factor of p over Z, or nullopt when p is irreducible over Q.
/// Candidate factors come from products of numerically computed complex
/// roots and are only ever accepted after an exact division, so a returned
/// factor is always genuine. Intended for the small degrees handled here;
/// throws std::domain_error above degree 16.
std::optional<IntPolynomial> find_factor(const IntPolynomial& p);

inline bool is_irreducible(const IntPolynomial& p) {
  return p.degree() >= 1 && !find_factor(p).has_value();
}

}  // namespace salem
