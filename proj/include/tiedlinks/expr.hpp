#pragma once

#include <string>

#include "tiedlinks/ext_scalar.hpp"

namespace tiedlinks {

/// Evaluates an infix expression over {u, z, t, w, integers, + - * / ^ ( )}
/// in the quadratic extension, with z -> A and t -> B.  Exponents are
/// (possibly negative) integers.  Throws ParseError on malformed input and
/// std::domain_error on division by zero.
ExtScalar parse_paper_expr(const std::string& text);

}  // namespace tiedlinks
