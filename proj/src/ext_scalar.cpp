#include "tiedlinks/ext_scalar.hpp"

#include <stdexcept>

namespace tiedlinks {

const RationalFn& ExtScalar::ell() {
    static const RationalFn kL = [] {
        TracePoly num = TracePoly::var_a() + TracePoly::var_b() -
                        TracePoly::monomial(0, 1, LaurentU::u_pow(1));
        TracePoly den = TracePoly::monomial(1, 0, LaurentU::u_pow(1));
        return RationalFn(std::move(num), std::move(den));
    }();
    return kL;
}

ExtScalar ExtScalar::w_pow(long k) {
    // even k: L^(k/2); odd k: L^((k-1)/2) * w, valid for negative k as well
    // since w^-1 = w/L.
    const long half = (k >= 0 ? k : k - 1) / 2;  // floor(k/2)
    if (k % 2 == 0) return ExtScalar(ell().pow(k / 2));
    return ExtScalar(RationalFn(0), ell().pow(half));
}

ExtScalar ExtScalar::dbar() {
    // 1/(A sqrt(L)) = w/(A L); the odd part simplifies to u/(A + B - uB).
    RationalFn a(TracePoly::var_a());
    return ExtScalar(RationalFn(0), (a * ell()).inverse());
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
    even_ += o.even_;
    odd_ += o.odd_;
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
    even_ -= o.even_;
    odd_ -= o.odd_;
    return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
    *this = *this * o;
    return *this;
}

ExtScalar ExtScalar::operator-() const { return ExtScalar(-even_, -odd_); }

ExtScalar ExtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero extension element");
    RationalFn norm = even_ * even_ - odd_ * odd_ * ell();
    // norm = 0 would mean L = (even/odd)^2, impossible for nonzero elements
    return ExtScalar(even_ / norm, -odd_ / norm);
}

ExtScalar ExtScalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    ExtScalar acc(1);
    for (long i = 0; i < k; ++i) acc *= *this;
    return acc;
}

Rational ExtScalar::eval_at(const Rational& u0, const Rational& a0, const Rational& b0,
                            const Rational& w0) const {
    return even_.eval(u0, a0, b0) + odd_.eval(u0, a0, b0) * w0;
}

std::string ExtScalar::str(const std::string& avar, const std::string& bvar) const {
    if (odd_.is_zero()) return even_.str(avar, bvar);
    std::string w = "(" + odd_.str(avar, bvar) + ")*w";
    if (even_.is_zero()) return w;
    return even_.str(avar, bvar) + " + " + w;
}

std::string ExtScalar::latex() const {
    if (odd_.is_zero()) return even_.latex();
    std::string w = "\\left(" + odd_.latex() + "\\right)\\sqrt{\\mathsf{L}}";
    if (even_.is_zero()) return w;
    return even_.latex() + " + " + w;
}

ExtScalar operator+(ExtScalar a, const ExtScalar& b) {
    a += b;
    return a;
}

ExtScalar operator-(ExtScalar a, const ExtScalar& b) {
    a -= b;
    return a;
}

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    RationalFn even = a.even() * b.even() + a.odd() * b.odd() * ExtScalar::ell();
    RationalFn odd = a.even() * b.odd() + a.odd() * b.even();
    return ExtScalar(std::move(even), std::move(odd));
}

}  // namespace tiedlinks
