#include "tiedlinks/detail/poly_gcd.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

// Primitive-PRS gcd on a dense recursive representation.  Variable nesting,
// innermost first: u, then B, then A.  Inputs are scaled to primitive integer
// polynomials first so that content stripping has teeth at every level;
// without that the pseudo-remainder sequences grow exponentially.

namespace tiedlinks::detail {
namespace {

struct RPoly {
    // level 0: the constant `c`.  level k > 0: dense coefficients in the
    // level-k variable, each a level k-1 polynomial.  Trailing zeros trimmed.
    int level = 0;
    Rational c = 0;
    std::vector<RPoly> coef;

    bool zero() const { return level == 0 ? sgn(c) == 0 : coef.empty(); }
    int deg() const { return static_cast<int>(coef.size()) - 1; }
};

RPoly make_zero(int level) {
    RPoly p;
    p.level = level;
    return p;
}

RPoly make_const(int level, const Rational& q) {
    if (level == 0) {
        RPoly p;
        p.c = q;
        return p;
    }
    RPoly p = make_zero(level);
    if (sgn(q) != 0) p.coef.push_back(make_const(level - 1, q));
    return p;
}

void trim(RPoly& p) {
    while (!p.coef.empty() && p.coef.back().zero()) p.coef.pop_back();
}

RPoly add(const RPoly& a, const RPoly& b) {
    if (a.level == 0) {
        RPoly r;
        r.c = a.c + b.c;
        return r;
    }
    RPoly r = make_zero(a.level);
    r.coef.resize(std::max(a.coef.size(), b.coef.size()), make_zero(a.level - 1));
    for (size_t i = 0; i < r.coef.size(); ++i) {
        const RPoly* pa = i < a.coef.size() ? &a.coef[i] : nullptr;
        const RPoly* pb = i < b.coef.size() ? &b.coef[i] : nullptr;
        if (pa && pb)
            r.coef[i] = add(*pa, *pb);
        else if (pa)
            r.coef[i] = *pa;
        else
            r.coef[i] = *pb;
    }
    trim(r);
    return r;
}

RPoly neg(const RPoly& a) {
    if (a.level == 0) {
        RPoly r;
        r.c = -a.c;
        return r;
    }
    RPoly r = make_zero(a.level);
    r.coef.reserve(a.coef.size());
    for (const auto& c : a.coef) r.coef.push_back(neg(c));
    return r;
}

RPoly sub(const RPoly& a, const RPoly& b) { return add(a, neg(b)); }

RPoly mul(const RPoly& a, const RPoly& b) {
    if (a.level == 0) {
        RPoly r;
        r.c = a.c * b.c;
        return r;
    }
    RPoly r = make_zero(a.level);
    if (a.coef.empty() || b.coef.empty()) return r;
    r.coef.resize(a.coef.size() + b.coef.size() - 1, make_zero(a.level - 1));
    for (size_t i = 0; i < a.coef.size(); ++i) {
        for (size_t j = 0; j < b.coef.size(); ++j) {
            r.coef[i + j] = add(r.coef[i + j], mul(a.coef[i], b.coef[j]));
        }
    }
    trim(r);
    return r;
}

// Multiply a level-L polynomial by a level L-1 coefficient.
RPoly scale(const RPoly& p, const RPoly& s) {
    RPoly r = make_zero(p.level);
    if (s.zero()) return r;
    r.coef.reserve(p.coef.size());
    for (const auto& c : p.coef) r.coef.push_back(mul(c, s));
    trim(r);
    return r;
}

RPoly scale_rational(const RPoly& p, const Rational& q) {
    if (p.level == 0) {
        RPoly r;
        r.c = p.c * q;
        return r;
    }
    RPoly r = make_zero(p.level);
    r.coef.reserve(p.coef.size());
    for (const auto& c : p.coef) r.coef.push_back(scale_rational(c, q));
    trim(r);
    return r;
}

// p * x^k in the level-L variable.
RPoly shift_var(const RPoly& p, int k) {
    if (p.zero() || k == 0) return p;
    RPoly r = make_zero(p.level);
    r.coef.resize(p.coef.size() + static_cast<size_t>(k), make_zero(p.level - 1));
    for (size_t i = 0; i < p.coef.size(); ++i) r.coef[i + k] = p.coef[i];
    return r;
}

void walk_base(const RPoly& p, const auto& fn) {
    if (p.level == 0) {
        if (sgn(p.c) != 0) fn(p.c);
        return;
    }
    for (const auto& c : p.coef) walk_base(c, fn);
}

Rational leading_base(const RPoly& p) {
    const RPoly* q = &p;
    while (q->level > 0) q = &q->coef.back();
    return q->c;
}

// Scale to an integer polynomial with coprime coefficients and positive
// leading base coefficient: the canonical associate.
RPoly integer_primitive(const RPoly& p) {
    if (p.zero()) return p;
    Int den_lcm = 1;
    walk_base(p, [&](const Rational& q) { den_lcm = lcm(den_lcm, q.get_den()); });
    RPoly r = scale_rational(p, Rational(den_lcm));
    Int num_gcd = 0;
    walk_base(r, [&](const Rational& q) { num_gcd = gcd(num_gcd, q.get_num()); });
    if (num_gcd != 1 && num_gcd != 0) r = scale_rational(r, Rational(Int(1), num_gcd));
    if (sgn(leading_base(r)) < 0) r = neg(r);
    return r;
}

RPoly gcd_rec(const RPoly& a, const RPoly& b);

// Divides f by the level L-1 coefficient s; requires exactness.
bool div_coeff(const RPoly& f, const RPoly& s, RPoly& out);

bool div_exact(const RPoly& f, const RPoly& g, RPoly& out) {
    if (f.level == 0) {
        if (sgn(g.c) == 0) return false;
        out.level = 0;
        out.c = f.c / g.c;
        out.coef.clear();
        return true;
    }
    if (g.zero()) return false;
    RPoly rem = f;
    RPoly q = make_zero(f.level);
    if (rem.zero()) {
        out = q;
        return true;
    }
    if (rem.deg() < g.deg()) return false;
    q.coef.resize(rem.deg() - g.deg() + 1, make_zero(f.level - 1));
    while (!rem.zero() && rem.deg() >= g.deg()) {
        RPoly qc;
        if (!div_exact(rem.coef.back(), g.coef.back(), qc)) return false;
        const int d = rem.deg() - g.deg();
        q.coef[d] = qc;
        rem = sub(rem, shift_var(scale(g, qc), d));
        if (!rem.zero() && rem.deg() >= g.deg() + d) return false;  // no progress
    }
    if (!rem.zero()) return false;
    trim(q);
    out = q;
    return true;
}

bool div_coeff(const RPoly& f, const RPoly& s, RPoly& out) {
    RPoly r = make_zero(f.level);
    r.coef.reserve(f.coef.size());
    for (const auto& c : f.coef) {
        RPoly q;
        if (!div_exact(c, s, q)) return false;
        r.coef.push_back(std::move(q));
    }
    trim(r);
    out = r;
    return true;
}

// gcd of all coefficients; a level L-1 polynomial.
RPoly content(const RPoly& p) {
    RPoly c = make_zero(p.level - 1);
    for (const auto& q : p.coef) {
        if (q.zero()) continue;
        c = gcd_rec(c, q);
        if (c.level == 0 ? c.c == 1 : (c.deg() == 0 && c.coef[0].level == 0 && c.coef[0].c == 1))
            break;  // already a unit
    }
    return c;
}

RPoly primitive_part(const RPoly& p, const RPoly& cont) {
    RPoly out;
    if (!div_coeff(p, cont, out)) throw std::logic_error("content does not divide");
    return integer_primitive(out);
}

// Pseudo-remainder lc(b)^(delta+1) a mod b in the top variable, with the
// multiplier padded to exactly that power (the subresultant divisions below
// rely on it).
RPoly prem_sub(const RPoly& a, const RPoly& b, int& delta) {
    delta = a.deg() - b.deg();
    RPoly r = a;
    int mults = 0;
    while (!r.zero() && r.deg() >= b.deg()) {
        RPoly t = shift_var(scale(b, r.coef.back()), r.deg() - b.deg());
        r = sub(scale(r, b.coef.back()), t);
        ++mults;
    }
    for (; mults < delta + 1; ++mults) r = scale(r, b.coef.back());
    return r;
}

// Classical monic Euclid over the rationals for the innermost variable;
// no content bookkeeping needed over a field.
RPoly gcd_univariate(RPoly a, RPoly b) {
    while (!b.zero()) {
        const Rational lcb = b.coef.back().c;
        while (!a.zero() && a.deg() >= b.deg()) {
            const Rational q = a.coef.back().c / lcb;
            a = sub(a, shift_var(scale(b, make_const(0, q)), a.deg() - b.deg()));
        }
        std::swap(a, b);
    }
    return integer_primitive(a);
}

RPoly coeff_pow(const RPoly& x, int k) {
    RPoly r = make_const(x.level, Rational(1));
    for (int i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

RPoly gcd_rec(const RPoly& a, const RPoly& b) {
    if (a.zero()) return integer_primitive(b);
    if (b.zero()) return integer_primitive(a);
    if (a.level == 0) {
        return make_const(0, Rational(gcd(a.c.get_num(), b.c.get_num())));
    }
    if (a.level == 1) return gcd_univariate(a, b);

    // Brown's subresultant remainder sequence on the primitive parts: the
    // factor g h^delta of each pseudo-remainder is known in advance, so the
    // sequence needs exact divisions only and one content strip at the end.
    RPoly ca = content(a);
    RPoly cb = content(b);
    RPoly c = gcd_rec(ca, cb);
    RPoly pa = primitive_part(a, ca);
    RPoly pb = primitive_part(b, cb);
    if (pa.deg() < pb.deg()) std::swap(pa, pb);
    RPoly g = make_const(a.level - 1, Rational(1));
    RPoly h = make_const(a.level - 1, Rational(1));
    for (;;) {
        int delta = 0;
        RPoly r = prem_sub(pa, pb, delta);
        if (r.zero()) break;
        RPoly divisor = mul(g, coeff_pow(h, delta));
        pa = pb;
        if (!div_coeff(r, divisor, pb)) throw std::logic_error("subresultant division failed");
        g = pa.coef.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            RPoly num = coeff_pow(g, delta);
            RPoly den = coeff_pow(h, delta - 1);
            RPoly next;
            if (!div_exact(num, den, next)) throw std::logic_error("subresultant h failed");
            h = next;
        }
        if (pb.deg() == 0) {
            // a nonzero constant remainder: the primitive parts are coprime
            return integer_primitive(scale(make_const(a.level, Rational(1)), c));
        }
    }
    return integer_primitive(scale(primitive_part(pb, content(pb)), c));
}

constexpr int kTopLevel = 3;  // A over B over u over Q

RPoly from_trace_poly(const TracePoly& p) {
    RPoly r = make_zero(kTopLevel);
    for (const auto& [k, lau] : p.terms()) {
        for (const auto& [e, q] : lau.terms()) {
            if (e < 0) throw std::logic_error("negative u exponent in gcd input");
            // build monomial q * u^e * B^b * A^a
            RPoly m1 = shift_var(make_const(1, q), static_cast<int>(e));
            RPoly m2 = make_zero(2);
            m2.coef.resize(k.b + 1, make_zero(1));
            m2.coef[k.b] = m1;
            RPoly m3 = make_zero(3);
            m3.coef.resize(k.a + 1, make_zero(2));
            m3.coef[k.a] = m2;
            r = add(r, m3);
        }
    }
    return r;
}

TracePoly to_trace_poly(const RPoly& p) {
    TracePoly out;
    for (size_t a = 0; a < p.coef.size(); ++a) {
        const RPoly& pb = p.coef[a];
        for (size_t b = 0; b < pb.coef.size(); ++b) {
            const RPoly& pu = pb.coef[b];
            LaurentU c;
            for (size_t e = 0; e < pu.coef.size(); ++e) {
                c += LaurentU::u_pow(static_cast<long>(e), pu.coef[e].c);
            }
            out += TracePoly::monomial(static_cast<unsigned>(a), static_cast<unsigned>(b),
                                       std::move(c));
        }
    }
    return out;
}

}  // namespace

TracePoly poly_gcd(const TracePoly& f, const TracePoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const RPoly fi = integer_primitive(from_trace_poly(f));
    const RPoly gi = integer_primitive(from_trace_poly(g));
    return to_trace_poly(gcd_rec(fi, gi));
}

TracePoly poly_div_exact(const TracePoly& f, const TracePoly& g) {
    if (f.is_zero()) return TracePoly();
    RPoly out;
    if (!div_exact(from_trace_poly(f), from_trace_poly(g), out)) {
        throw std::logic_error("polynomial division is not exact");
    }
    return to_trace_poly(out);
}

}  // namespace tiedlinks::detail
