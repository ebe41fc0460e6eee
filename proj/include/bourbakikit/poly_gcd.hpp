#pragma once

#include <vector>

#include "bourbakikit/polynomial.hpp"

namespace bbk {

// Componentwise-minimal exponent vector over all terms. Precondition: f != 0.
ExponentVector monomial_content(const Polynomial& f);

// Scales f so its coefficients are coprime integers and the leading
// coefficient is positive. normalize(0) = 0. Every gcd in this toolkit is
// reported in this canonical form (over a field the gcd is only defined up
// to units).
Polynomial normalize_primitive(const Polynomial& f);

// gcd(f, g) in canonical form. Monomial content is split off first, then the
// primitive parts go through a primitive pseudo-remainder recursion on the
// highest variable actually present, with coefficient contents handled by
// recursion on fewer variables.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Iterated gcd with early exit once the running gcd reaches 1. Throws
// std::invalid_argument on an empty list.
Polynomial gcd_of_list(const std::vector<Polynomial>& fs);

}  // namespace bbk
