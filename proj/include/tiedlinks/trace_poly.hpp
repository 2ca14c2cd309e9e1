#pragma once

#include <map>
#include <string>
#include <utility>

#include "tiedlinks/laurent.hpp"

namespace tiedlinks {

/// Exponent pair of an A^a B^b monomial.
struct ABExp {
    unsigned a = 0;
    unsigned b = 0;
    bool operator==(const ABExp& o) const { return a == o.a && b == o.b; }
};

/// Fixed monomial order: graded lexicographic with A > B.  The map is kept
/// ascending, so the leading monomial is the last entry.
struct ABOrder {
    bool operator()(const ABExp& x, const ABExp& y) const {
        if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
        return x.a < y.a;
    }
};

/// Polynomial in the trace parameters A and B with LaurentU coefficients.
/// Output type of the Markov trace; also the numerator/denominator type of
/// RationalFn.  No stored coefficient is the zero LaurentU.
class TracePoly {
public:
    TracePoly() = default;
    TracePoly(long value);  // NOLINT: implicit from integer constants is intended
    explicit TracePoly(const Rational& value);
    explicit TracePoly(LaurentU value);

    static TracePoly monomial(unsigned a, unsigned b, LaurentU coeff);
    static TracePoly var_a() { return monomial(1, 0, LaurentU(1)); }
    static TracePoly var_b() { return monomial(0, 1, LaurentU(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::map<ABExp, LaurentU, ABOrder>& terms() const { return terms_; }
    LaurentU coeff(unsigned a, unsigned b) const;

    TracePoly& operator+=(const TracePoly& o);
    TracePoly& operator-=(const TracePoly& o);
    TracePoly& operator*=(const TracePoly& o);
    TracePoly operator-() const;

    /// Multiply every coefficient by u^k.
    TracePoly u_shifted(long k) const;
    /// Smallest u-exponent appearing in any coefficient.  Require nonzero.
    long min_u_exp() const;
    long max_u_exp() const;

    /// Leading rational coefficient: the coefficient of the largest u-power
    /// inside the leading AB-monomial.  Require nonzero.
    Rational leading_rational() const;

    /// Exact evaluation; throws EvalError on u0 = 0 with negative exponents.
    Rational eval(const Rational& u0, const Rational& a0, const Rational& b0) const;

    bool operator==(const TracePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TracePoly& o) const { return !(*this == o); }

    std::string str(const std::string& avar = "A", const std::string& bvar = "B",
                    const std::string& uvar = "u") const;
    std::string latex() const;

private:
    std::map<ABExp, LaurentU, ABOrder> terms_;
};

TracePoly operator+(TracePoly a, const TracePoly& b);
TracePoly operator-(TracePoly a, const TracePoly& b);
TracePoly operator*(const TracePoly& a, const TracePoly& b);

}  // namespace tiedlinks
