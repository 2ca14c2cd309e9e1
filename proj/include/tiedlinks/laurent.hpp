#pragma once

#include <map>
#include <string>

#include "tiedlinks/rational.hpp"

namespace tiedlinks {

/// Laurent polynomial in u over the rationals.  The coefficient atom of
/// everything in this library: trace polynomials, word coefficients and
/// rational functions are all built on top of it.
///
/// Invariant: no stored coefficient is zero, so structural equality of the
/// term maps is semantic equality.
class LaurentU {
public:
    LaurentU() = default;
    LaurentU(long value);  // NOLINT: implicit from integer constants is intended
    explicit LaurentU(const Rational& value);

    /// coeff * u^exp
    static LaurentU u_pow(long exp, const Rational& coeff = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Smallest/largest exponent with nonzero coefficient.  Require nonzero.
    long min_exp() const;
    long max_exp() const;

    Rational coeff(long exp) const;
    const std::map<long, Rational>& terms() const { return terms_; }

    LaurentU& operator+=(const LaurentU& o);
    LaurentU& operator-=(const LaurentU& o);
    LaurentU& operator*=(const LaurentU& o);
    LaurentU operator-() const;

    /// Multiply by u^k.
    LaurentU shifted(long k) const;

    /// Exact evaluation.  Throws EvalError when u0 = 0 meets a negative exponent.
    Rational eval(const Rational& u0) const;

    bool operator==(const LaurentU& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentU& o) const { return !(*this == o); }

    std::string str(const std::string& var = "u") const;
    std::string latex(const std::string& var = "u") const;

private:
    std::map<long, Rational> terms_;

    void set(long exp, Rational c);
};

LaurentU operator+(LaurentU a, const LaurentU& b);
LaurentU operator-(LaurentU a, const LaurentU& b);
LaurentU operator*(const LaurentU& a, const LaurentU& b);

}  // namespace tiedlinks
