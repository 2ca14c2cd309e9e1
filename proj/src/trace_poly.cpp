#include "tiedlinks/trace_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tiedlinks {

TracePoly::TracePoly(long value) {
    LaurentU c(value);
    if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
}

TracePoly::TracePoly(const Rational& value) {
    LaurentU c(value);
    if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
}

TracePoly::TracePoly(LaurentU value) {
    if (!value.is_zero()) terms_[{0, 0}] = std::move(value);
}

TracePoly TracePoly::monomial(unsigned a, unsigned b, LaurentU coeff) {
    TracePoly r;
    if (!coeff.is_zero()) r.terms_[{a, b}] = std::move(coeff);
    return r;
}

bool TracePoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ABExp{0, 0} &&
           terms_.begin()->second.is_one();
}

LaurentU TracePoly::coeff(unsigned a, unsigned b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? LaurentU() : it->second;
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TracePoly& TracePoly::operator*=(const TracePoly& o) {
    *this = *this * o;
    return *this;
}

TracePoly TracePoly::operator-() const {
    TracePoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

TracePoly TracePoly::u_shifted(long k) const {
    TracePoly r;
    for (const auto& [key, c] : terms_) r.terms_[key] = c.shifted(k);
    return r;
}

long TracePoly::min_u_exp() const {
    if (terms_.empty()) throw std::logic_error("min_u_exp of zero polynomial");
    long m = terms_.begin()->second.min_exp();
    for (const auto& [k, c] : terms_) m = std::min(m, c.min_exp());
    return m;
}

long TracePoly::max_u_exp() const {
    if (terms_.empty()) throw std::logic_error("max_u_exp of zero polynomial");
    long m = terms_.begin()->second.max_exp();
    for (const auto& [k, c] : terms_) m = std::max(m, c.max_exp());
    return m;
}

Rational TracePoly::leading_rational() const {
    if (terms_.empty()) throw std::logic_error("leading_rational of zero polynomial");
    const LaurentU& lead = terms_.rbegin()->second;
    return lead.terms().rbegin()->second;
}

Rational TracePoly::eval(const Rational& u0, const Rational& a0, const Rational& b0) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational m = c.eval(u0);
        for (unsigned i = 0; i < k.a; ++i) m *= a0;
        for (unsigned i = 0; i < k.b; ++i) m *= b0;
        acc += m;
    }
    return acc;
}

TracePoly operator+(TracePoly a, const TracePoly& b) {
    a += b;
    return a;
}

TracePoly operator-(TracePoly a, const TracePoly& b) {
    a -= b;
    return a;
}

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
    TracePoly r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            r += TracePoly::monomial(ka.a + kb.a, ka.b + kb.b, ca * cb);
        }
    }
    return r;
}

namespace {

std::string ab_part(const ABExp& k, const std::string& avar, const std::string& bvar,
                    bool tex) {
    std::ostringstream os;
    auto emit = [&](const std::string& v, unsigned e) {
        if (e == 0) return;
        if (os.tellp() > 0) os << (tex ? " " : "*");
        os << v;
        if (e > 1) os << (tex ? "^{" : "^") << e << (tex ? "}" : "");
    };
    emit(avar, k.a);
    emit(bvar, k.b);
    return os.str();
}

}  // namespace

namespace {

std::string render_poly(const std::map<ABExp, LaurentU, ABOrder>& terms,
                        const std::string& avar, const std::string& bvar,
                        const std::string& uvar, bool tex) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::string times = tex ? " " : "*";
    // leading monomial first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const std::string mono = ab_part(it->first, avar, bvar, tex);
        LaurentU c = it->second;
        bool negated = false;
        if (c.terms().size() == 1 && sgn(c.terms().begin()->second) < 0) {
            c = -c;
            negated = true;
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        const std::string cs = tex ? c.latex(uvar) : c.str(uvar);
        if (mono.empty()) {
            os << (c.terms().size() > 1 && !first ? "(" + cs + ")" : cs);
        } else if (c.is_one()) {
            os << mono;
        } else if (c.terms().size() == 1) {
            os << cs << times << mono;
        } else {
            os << "(" << cs << ")" << times << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace

std::string TracePoly::str(const std::string& avar, const std::string& bvar,
                           const std::string& uvar) const {
    return render_poly(terms_, avar, bvar, uvar, false);
}

std::string TracePoly::latex() const {
    return render_poly(terms_, "\\mathsf{A}", "\\mathsf{B}", "u", true);
}

}  // namespace tiedlinks
