#include "tiedlinks/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "tiedlinks/errors.hpp"

namespace tiedlinks {

LaurentU::LaurentU(long value) {
    if (value != 0) terms_[0] = Rational(value);
}

LaurentU::LaurentU(const Rational& value) {
    if (sgn(value) != 0) terms_[0] = value;
}

LaurentU LaurentU::u_pow(long exp, const Rational& coeff) {
    LaurentU r;
    if (sgn(coeff) != 0) r.terms_[exp] = coeff;
    return r;
}

bool LaurentU::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentU::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentU::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentU::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentU::set(long exp, Rational c) {
    if (sgn(c) == 0) {
        terms_.erase(exp);
    } else {
        terms_[exp] = std::move(c);
    }
}

LaurentU& LaurentU::operator+=(const LaurentU& o) {
    for (const auto& [e, c] : o.terms_) {
        Rational s = coeff(e) + c;
        set(e, s);
    }
    return *this;
}

LaurentU& LaurentU::operator-=(const LaurentU& o) {
    for (const auto& [e, c] : o.terms_) {
        Rational s = coeff(e) - c;
        set(e, s);
    }
    return *this;
}

LaurentU& LaurentU::operator*=(const LaurentU& o) {
    *this = *this * o;
    return *this;
}

LaurentU LaurentU::operator-() const {
    LaurentU r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentU LaurentU::shifted(long k) const {
    LaurentU r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

Rational LaurentU::eval(const Rational& u0) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        if (e < 0 && sgn(u0) == 0) throw EvalError("u = 0 hits a negative exponent");
        Rational p(1);
        Rational base = e >= 0 ? u0 : Rational(u0.get_den(), u0.get_num());
        if (e < 0) base.canonicalize();
        for (long k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        acc += c * p;
    }
    return acc;
}

LaurentU operator+(LaurentU a, const LaurentU& b) {
    a += b;
    return a;
}

LaurentU operator-(LaurentU a, const LaurentU& b) {
    a -= b;
    return a;
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    LaurentU r;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Rational add = ca * cb;
            r += LaurentU::u_pow(ea + eb, add);
        }
    }
    return r;
}

namespace {

void append_monomial(std::ostringstream& os, const Rational& c, long e, bool first,
                     const std::string& var, bool tex) {
    Rational a = abs(c);
    if (first) {
        if (sgn(c) < 0) os << "-";
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (e == 0) {
        os << a.get_str();
        return;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (e != 1) {
        if (tex)
            os << "^{" << e << "}";
        else
            os << "^" << e;
    }
}

}  // namespace

std::string LaurentU::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_monomial(os, c, e, first, var, false);
        first = false;
    }
    return os.str();
}

std::string LaurentU::latex(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_monomial(os, c, e, first, var, true);
        first = false;
    }
    return os.str();
}

}  // namespace tiedlinks
