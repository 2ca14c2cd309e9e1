#pragma once

#include <string>

#include "tiedlinks/rational_fn.hpp"

namespace tiedlinks {

/// Element p + q*w of the quadratic extension of the rational-function field
/// with w^2 = L, where L = (A + B - uB)/(uA).  L is not a square in the base
/// field, so (even, odd) parts are unique and zero-testing is componentwise.
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(long value) : even_(value) {}  // NOLINT: implicit intended
    explicit ExtScalar(RationalFn even) : even_(std::move(even)) {}
    ExtScalar(RationalFn even, RationalFn odd)
        : even_(std::move(even)), odd_(std::move(odd)) {}

    /// L = (A + B - uB)/(uA)
    static const RationalFn& ell();
    /// w = sqrt(L) as an extension element.
    static ExtScalar w() { return ExtScalar(RationalFn(0), RationalFn(1)); }
    /// w^k with w^-1 = w/L.
    static ExtScalar w_pow(long k);
    /// The normalization constant 1/(A*sqrt(L)) = w/(A*L).
    static ExtScalar dbar();

    const RationalFn& even() const { return even_; }
    const RationalFn& odd() const { return odd_; }

    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    ExtScalar& operator*=(const ExtScalar& o);
    ExtScalar operator-() const;

    /// Negates the odd part.
    ExtScalar conj() const { return ExtScalar(even_, -odd_); }
    /// (p + qw)^-1 = (p - qw)/(p^2 - q^2 L).  Throws std::domain_error on zero.
    ExtScalar inverse() const;
    ExtScalar pow(long k) const;

    /// Value at a point with an explicit w0; the caller is responsible for
    /// w0^2 = L(u0, a0, b0) when that consistency matters.
    Rational eval_at(const Rational& u0, const Rational& a0, const Rational& b0,
                     const Rational& w0) const;

    bool operator==(const ExtScalar& o) const { return even_ == o.even_ && odd_ == o.odd_; }
    bool operator!=(const ExtScalar& o) const { return !(*this == o); }

    std::string str(const std::string& avar = "A", const std::string& bvar = "B") const;
    std::string latex() const;

private:
    RationalFn even_;
    RationalFn odd_;
};

ExtScalar operator+(ExtScalar a, const ExtScalar& b);
ExtScalar operator-(ExtScalar a, const ExtScalar& b);
ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);

}  // namespace tiedlinks
