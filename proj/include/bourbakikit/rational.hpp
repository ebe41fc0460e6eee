#pragma once

#include <gmpxx.h>

#include <string>

namespace bbk {

// Exact rational coefficients. mpq_class keeps every value in reduced form
// with a positive denominator, which is exactly the canonical form the JSON
// schema expects.
using Rational = mpq_class;

// Emits "num/den" in lowest terms, denominator always present ("3/1", "-2/3").
std::string rational_to_string(const Rational& q);

// Accepts "num" or "num/den" with optional sign. Throws std::invalid_argument
// on anything else (including a zero denominator).
Rational rational_from_string(const std::string& s);

}  // namespace bbk
