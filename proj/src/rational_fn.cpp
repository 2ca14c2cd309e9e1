#include "tiedlinks/rational_fn.hpp"

#include <algorithm>
#include <stdexcept>

#include "tiedlinks/detail/poly_gcd.hpp"
#include "tiedlinks/errors.hpp"

namespace tiedlinks {

RationalFn::RationalFn(TracePoly numerator, TracePoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    canonicalize();
}

void RationalFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = TracePoly(1);
        return;
    }
    // clear u-powers: shift both by the same u^k so exponents are >= 0 and
    // at least one of the two has a u-free term
    const long shift = -std::min(num_.min_u_exp(), den_.min_u_exp());
    if (shift != 0) {
        num_ = num_.u_shifted(shift);
        den_ = den_.u_shifted(shift);
    }
    TracePoly g = detail::poly_gcd(num_, den_);
    num_ = detail::poly_div_exact(num_, g);
    den_ = detail::poly_div_exact(den_, g);
    // monic denominator pins the remaining rational unit
    const Rational lead = den_.leading_rational();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= TracePoly(inv);
        den_ *= TracePoly(inv);
    }
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    *this = RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
    *this = RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    *this = RationalFn(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    *this *= o.inverse();
    return *this;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFn acc(1);
    for (long i = 0; i < k; ++i) acc *= *this;
    return acc;
}

Rational RationalFn::eval(const Rational& u0, const Rational& a0, const Rational& b0) const {
    const Rational d = den_.eval(u0, a0, b0);
    if (sgn(d) == 0) throw EvalError("denominator vanishes at the evaluation point");
    return num_.eval(u0, a0, b0) / d;
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFn::str(const std::string& avar, const std::string& bvar,
                            const std::string& uvar) const {
    if (den_.is_one()) return num_.str(avar, bvar, uvar);
    return "(" + num_.str(avar, bvar, uvar) + ")/(" + den_.str(avar, bvar, uvar) + ")";
}

std::string RationalFn::latex() const {
    if (den_.is_one()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

RationalFn operator+(RationalFn a, const RationalFn& b) {
    a += b;
    return a;
}

RationalFn operator-(RationalFn a, const RationalFn& b) {
    a -= b;
    return a;
}

RationalFn operator*(RationalFn a, const RationalFn& b) {
    a *= b;
    return a;
}

RationalFn operator/(RationalFn a, const RationalFn& b) {
    a /= b;
    return a;
}

}  // namespace tiedlinks
