#pragma once

#include <gmpxx.h>

#include <string>

namespace tiedlinks {

// Exact arbitrary-precision rationals.  GMP keeps values canonical
// (reduced, positive denominator) after every operation.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace tiedlinks
