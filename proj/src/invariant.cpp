#include "tiedlinks/invariant.hpp"

#include <random>
#include <stdexcept>

#include "tiedlinks/errors.hpp"
#include "tiedlinks/expr.hpp"

namespace tiedlinks {

InvariantValue normalize(const TracePoly& trace, int strands, long exponent) {
    if (strands < 1) throw std::invalid_argument("strands must be >= 1");
    ExtScalar v = ExtScalar::dbar().pow(strands - 1) * ExtScalar::w_pow(exponent) *
                  ExtScalar(RationalFn(trace));
    return InvariantValue{std::move(v), strands, exponent};
}

InvariantValue invariant_F(const TiedBraid& b, const EngineLog* log) {
    return normalize(markov_trace(b, log), b.strands, exponent(b));
}

bool paper_form_equal(const InvariantValue& v, const std::string& expr) {
    return v.value == parse_paper_expr(expr);
}

namespace {

ExtScalar scalar_u_pow(long k) {
    return ExtScalar(RationalFn(TracePoly(LaurentU::u_pow(k))));
}

}  // namespace

bool check_skein(const TiedBraid& b, std::size_t site, SkeinRule rule) {
    const SkeinVariants v = skein_variants(b, site);
    const ExtScalar fp = invariant_F(v.plus).value;
    const ExtScalar fm = invariant_F(v.minus).value;
    const ExtScalar ft = invariant_F(v.tied).value;
    const ExtScalar fpt = invariant_F(v.plus_tied).value;
    const ExtScalar w = ExtScalar::w();
    const ExtScalar winv = ExtScalar::w_pow(-1);
    const ExtScalar cpos = ExtScalar(1) - scalar_u_pow(-1);  // 1 - u^-1
    const ExtScalar cneg = scalar_u_pow(1) - ExtScalar(1);   // u - 1

    switch (rule) {
        case SkeinRule::III:
            return winv * fp - w * fm == cpos * ft + cpos * winv * fpt;
        case SkeinRule::IV: {
            const ExtScalar fmt = invariant_F(tied_negative_variant(b, site)).value;
            return scalar_u_pow(-1) * winv * fpt - w * fmt == cpos * ft;
        }
        case SkeinRule::Va: {
            const ExtScalar fmt = invariant_F(tied_negative_variant(b, site)).value;
            return winv * fp == w * (fm + cneg * fmt) + cneg * ft;
        }
        case SkeinRule::Vb:
            return w * fm == winv * (fp + (scalar_u_pow(-1) - ExtScalar(1)) * fpt) +
                                 (scalar_u_pow(-1) - ExtScalar(1)) * ft;
    }
    return false;
}

bool check_markov_invariance(const TiedBraid& b, uint64_t seed) {
    const ExtScalar f0 = invariant_F(b).value;
    for (MarkovMove mv : {MarkovMove::StabPos, MarkovMove::StabNeg, MarkovMove::StabPosTied,
                          MarkovMove::StabNegTied}) {
        if (invariant_F(markov_move(b, mv)).value != f0) return false;
    }
    std::mt19937_64 rng(seed);
    if (b.strands >= 2) {
        for (int k = 0; k < 3; ++k) {
            const uint64_t r = rng();
            const int idx = 1 + static_cast<int>(r % static_cast<uint64_t>(b.strands - 1));
            const long pw = (r >> 32) % 2 == 0 ? 1 : -1;
            const TiedBraid conj = conjugate(b, BraidLetter::sigma(idx, pw));
            if (invariant_F(conj).value != f0) return false;
        }
    }
    if (!b.letters.empty()) {
        for (int k = 0; k < 2; ++k) {
            const long rot = static_cast<long>(rng() % b.letters.size());
            if (invariant_F(cyclic_rotate(b, rot)).value != f0) return false;
        }
    }
    return true;
}

InvariantValue unlink_value(int components, int ties) {
    if (components < 1) throw std::out_of_range("need at least one component");
    if (ties < 0 || ties >= components) {
        throw std::out_of_range("a trivial braid on c strands carries at most c-1 ties");
    }
    TiedBraid b;
    b.strands = components;
    for (int i = components - ties; i <= components - 1; ++i) {
        b.letters.push_back(BraidLetter::eta(i));
    }
    InvariantValue v = invariant_F(b);
    const ExtScalar expected =
        ExtScalar(RationalFn(TracePoly::monomial(0, static_cast<unsigned>(ties), LaurentU(1)))) *
        ExtScalar::dbar().pow(components - 1);
    if (v.value != expected) {
        throw std::logic_error("unlink value does not match the closed form at c=" +
                               std::to_string(components) + ", m=" + std::to_string(ties));
    }
    return v;
}

bool mirror_spot_check(const TiedBraid& all_tied, uint64_t seed) {
    TiedBraid mirror = all_tied;
    for (auto& l : mirror.letters) {
        if (l.kind == BraidKind::Sigma) l.power = -l.power;
    }
    const ExtScalar f = invariant_F(all_tied).value;
    const ExtScalar fm = invariant_F(mirror).value;

    std::mt19937_64 rng(seed);
    auto small_nonzero = [&rng]() {
        // rationals p/q with p in [-6,6]\{0}, q in [1,4]
        long p = static_cast<long>(rng() % 12) - 6;
        if (p >= 0) ++p;
        long q = 1 + static_cast<long>(rng() % 4);
        Rational r(p, q);
        r.canonicalize();
        return r;
    };
    int done = 0;
    int guard = 0;
    while (done < 4 && ++guard < 100) {
        const Rational u0 = small_nonzero();
        const Rational z0 = small_nonzero();
        const Rational w0 = small_nonzero();
        if (u0 == 1 || sgn(u0) == 0 || sgn(w0) == 0) continue;
        try {
            // t induced by the tie weight relation at each evaluation point
            const Rational t0 = z0 * (u0 * w0 * w0 - 1) / (1 - u0);
            const Rational ui = Rational(1) / u0;
            const Rational wi = Rational(1) / w0;
            const Rational ti = z0 * (ui * wi * wi - 1) / (1 - ui);
            const Rational lhs = fm.eval_at(u0, z0, t0, w0);
            const Rational rhs = f.eval_at(ui, z0, ti, wi);
            if (lhs != rhs) return false;
            ++done;
        } catch (const EvalError&) {
            // unlucky point; resample
        }
    }
    return done == 4;
}

}  // namespace tiedlinks
