#pragma once

#include <string>

#include "tiedlinks/trace_poly.hpp"

namespace tiedlinks {

/// Rational function in (u, A, B): a quotient of TracePolys kept canonical.
///
/// Canonical form: u-powers cleared so numerator and denominator are genuine
/// polynomials with no common u factor, numerator/denominator reduced by
/// their gcd, and the denominator scaled monic (leading coefficient 1 under
/// the fixed monomial order).  Equality is cross-multiplication equality.
class RationalFn {
public:
    RationalFn() : num_(0), den_(1) {}
    RationalFn(long value) : num_(value), den_(1) {}  // NOLINT: implicit intended
    explicit RationalFn(const Rational& value) : num_(value), den_(1) {}
    explicit RationalFn(TracePoly numerator) : num_(std::move(numerator)), den_(1) {}
    RationalFn(TracePoly numerator, TracePoly denominator);  // canonicalizes

    const TracePoly& num() const { return num_; }
    const TracePoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    RationalFn operator-() const;

    /// Throws std::domain_error on zero.
    RationalFn inverse() const;
    RationalFn pow(long k) const;

    /// Exact evaluation; throws EvalError when the denominator vanishes at
    /// the point (an unlucky evaluation point) or u0 = 0 meets u^-k.
    Rational eval(const Rational& u0, const Rational& a0, const Rational& b0) const;

    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    std::string str(const std::string& avar = "A", const std::string& bvar = "B",
                    const std::string& uvar = "u") const;
    std::string latex() const;

private:
    TracePoly num_;
    TracePoly den_;

    void canonicalize();
};

RationalFn operator+(RationalFn a, const RationalFn& b);
RationalFn operator-(RationalFn a, const RationalFn& b);
RationalFn operator*(RationalFn a, const RationalFn& b);
RationalFn operator/(RationalFn a, const RationalFn& b);

}  // namespace tiedlinks
