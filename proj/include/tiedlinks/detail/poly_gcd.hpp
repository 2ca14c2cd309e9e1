#pragma once

#include "tiedlinks/trace_poly.hpp"

namespace tiedlinks::detail {

// Polynomial gcd in Q[u, A, B].  Inputs must have non-negative u-exponents
// (shift Laurent fractions first).  The result is defined up to a rational
// unit; callers normalize scale themselves.
TracePoly poly_gcd(const TracePoly& f, const TracePoly& g);

// Exact division f / g.  Throws std::logic_error when g does not divide f.
TracePoly poly_div_exact(const TracePoly& f, const TracePoly& g);

}  // namespace tiedlinks::detail
