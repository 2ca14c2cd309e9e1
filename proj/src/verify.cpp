#include "tiedlinks/verify.hpp"

#include <random>
#include <stdexcept>

#include "tiedlinks/invariant.hpp"

namespace tiedlinks {

void SuiteResult::record(bool good, const std::string& what) {
    if (good) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < 8) failures.push_back(what);
}

namespace {

// A word guaranteed to contain at least one sigma letter (for skein sites).
TiedBraid random_braid_with_sigma(int n, int length, uint64_t seed) {
    TiedBraid b = random_braid(n, length, seed);
    bool has = false;
    for (const auto& l : b.letters) has = has || l.kind == BraidKind::Sigma;
    if (!has) b.letters[length / 2] = BraidLetter::sigma(1 + (n > 2 ? 1 : 0), 1);
    return b;
}

std::vector<std::size_t> sigma_sites(const TiedBraid& b) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (b.letters[i].kind == BraidKind::Sigma) s.push_back(i);
    }
    return s;
}

std::vector<RawLetter> to_raw(const TiedBraid& b) {
    std::vector<RawLetter> raw;
    for (const auto& l : b.letters) {
        raw.push_back(l.kind == BraidKind::Sigma ? RawLetter::t(l.index, l.power)
                                                 : RawLetter::e(l.index));
    }
    return raw;
}

TiedBraid concat(const TiedBraid& x, const TiedBraid& y, int strands) {
    TiedBraid r;
    r.strands = strands;
    r.letters = x.letters;
    r.letters.insert(r.letters.end(), y.letters.begin(), y.letters.end());
    return r;
}

}  // namespace

SuiteResult verify_skein(int cases, uint64_t seed) {
    SuiteResult res{"skein rules III/IV/Va/Vb"};
    std::mt19937_64 rng(seed);
    const ExtScalar w = ExtScalar::w();
    const ExtScalar winv = ExtScalar::w_pow(-1);
    const ExtScalar one(1);
    const ExtScalar uinv(RationalFn(TracePoly(LaurentU::u_pow(-1))));
    const ExtScalar uu(RationalFn(TracePoly(LaurentU::u_pow(1))));
    const ExtScalar cpos = one - uinv;
    const ExtScalar cneg = uu - one;

    for (int k = 0; k < cases; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = 1 + static_cast<int>(rng() % 12);
        const TiedBraid b = random_braid_with_sigma(n, len, rng());
        const auto sites = sigma_sites(b);
        const std::size_t site = sites[rng() % sites.size()];
        const std::string tag = render(b) + " @" + std::to_string(site);

        const SkeinVariants v = skein_variants(b, site);
        const ExtScalar fp = invariant_F(v.plus).value;
        const ExtScalar fm = invariant_F(v.minus).value;
        const ExtScalar ft = invariant_F(v.tied).value;
        const ExtScalar fpt = invariant_F(v.plus_tied).value;
        const ExtScalar fmt = invariant_F(tied_negative_variant(b, site)).value;

        res.record(winv * fp - w * fm == cpos * ft + cpos * winv * fpt, "III on " + tag);
        res.record(uinv * winv * fpt - w * fmt == cpos * ft, "IV on " + tag);
        res.record(winv * fp == w * (fm + cneg * fmt) + cneg * ft, "Va on " + tag);
        res.record(w * fm == winv * (fp + (uinv - one) * fpt) + (uinv - one) * ft,
                   "Vb on " + tag);
    }
    return res;
}

SuiteResult verify_markov(int cases, uint64_t seed) {
    SuiteResult res{"Markov moves"};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < cases; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = static_cast<int>(rng() % 13);
        const TiedBraid b = random_braid(n, len, rng());
        res.record(check_markov_invariance(b, rng()), render(b));
    }
    return res;
}

SuiteResult verify_unlink(int max_components) {
    SuiteResult res{"unlink closed form"};
    for (int c = 1; c <= max_components; ++c) {
        for (int m = 0; m < c; ++m) {
            try {
                unlink_value(c, m);
                res.record(true, "");
            } catch (const std::exception& e) {
                res.record(false, e.what());
            }
        }
    }
    return res;
}

namespace {

struct RelationCase {
    std::string name;
    std::vector<BraidLetter> lhs;
    std::vector<BraidLetter> rhs;
    int min_strands;
};

// The defining relations of the tied braid monoid, instantiated at concrete
// indices drawn from the context size.
std::vector<RelationCase> relation_instances(std::mt19937_64& rng) {
    auto S = [](int i, long e = 1) { return BraidLetter::sigma(i, e); };
    auto H = [](int i) { return BraidLetter::eta(i); };
    std::vector<RelationCase> rel;

    const int i = 1 + static_cast<int>(rng() % 2);  // adjacent pair (i, i+1)
    const int j = i + 1;
    rel.push_back({"braid far commutation", {S(1), S(3)}, {S(3), S(1)}, 5});
    rel.push_back({"braid relation", {S(i), S(j), S(i)}, {S(j), S(i), S(j)}, j + 2});
    rel.push_back({"ties commute", {H(i), H(j)}, {H(j), H(i)}, j + 2});
    rel.push_back({"tie slides through its crossing", {H(i), S(i)}, {S(i), H(i)}, i + 2});
    rel.push_back({"far tie commutation", {H(1), S(3)}, {S(3), H(1)}, 5});
    rel.push_back({"tie slides behind a strand", {H(i), S(j), S(i)}, {S(j), S(i), H(j)}, j + 2});
    rel.push_back(
        {"tie slides bypassing a strand", {H(i), S(j), S(i, -1)}, {S(j), S(i, -1), H(j)}, j + 2});
    rel.push_back(
        {"two-tie slide (left form)", {H(i), H(j), S(i)}, {H(j), S(i), H(j)}, j + 2});
    rel.push_back(
        {"two-tie slide (right form)", {H(j), S(i), H(j)}, {S(i), H(i), H(j)}, j + 2});
    rel.push_back({"ties are idempotent", {H(i), H(i)}, {H(i)}, i + 2});
    return rel;
}

}  // namespace

SuiteResult verify_trace_axioms(int cases_each, uint64_t seed) {
    SuiteResult res{"trace axioms"};
    std::mt19937_64 rng(seed);

    // rotation invariance
    for (int k = 0; k < cases_each; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = 1 + static_cast<int>(rng() % 12);
        const TiedBraid b = random_braid(n, len, rng());
        const long rot = static_cast<long>(rng() % b.letters.size());
        res.record(markov_trace(b) == markov_trace(cyclic_rotate(b, rot)),
                   "rotation on " + render(b));
    }

    // embedding stability: a trivial top strand changes nothing in the trace
    for (int k = 0; k < cases_each; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = static_cast<int>(rng() % 13);
        const TiedBraid b = random_braid(n, len, rng());
        TiedBraid wide = b;
        wide.strands = n + 1;
        res.record(markov_trace(b) == markov_trace(wide), "embedding on " + render(b));
    }

    // tie idempotency: duplicating an eta next to itself changes nothing
    for (int k = 0; k < cases_each; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = 1 + static_cast<int>(rng() % 12);
        TiedBraid b = random_braid(n, len, rng());
        std::size_t at = b.letters.size();
        for (std::size_t j = 0; j < b.letters.size(); ++j) {
            if (b.letters[j].kind == BraidKind::Eta) {
                at = j;
                break;
            }
        }
        if (at == b.letters.size()) {
            b.letters[rng() % b.letters.size()] =
                BraidLetter::eta(1 + static_cast<int>(rng() % (n - 1)));
            for (std::size_t j = 0; j < b.letters.size(); ++j) {
                if (b.letters[j].kind == BraidKind::Eta) at = j;
            }
        }
        TiedBraid doubled = b;
        doubled.letters.insert(doubled.letters.begin() + at, b.letters[at]);
        res.record(markov_trace(b) == markov_trace(doubled), "idempotency on " + render(b));
    }

    // inverse consistency: inject sigma_i sigma_i^-1 with the inverse
    // pre-expanded (T + (u^-1 - 1)E + (u^-1 - 1)ET) instead of cancelled
    for (int k = 0; k < cases_each; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const TiedBraid x = random_braid(n, static_cast<int>(rng() % 6), rng());
        const TiedBraid y = random_braid(n, static_cast<int>(rng() % 6), rng());
        const int i = 1 + static_cast<int>(rng() % (n - 1));
        const LaurentU c = LaurentU::u_pow(-1) - LaurentU(1);

        Element injected;
        for (const auto& [tail_kind, coeff] :
             std::vector<std::pair<Gen, LaurentU>>{{Gen::T, LaurentU(1)}, {Gen::E, c},
                                                   {Gen::ET, c}}) {
            std::vector<RawLetter> raw = to_raw(x);
            raw.push_back(RawLetter::t(i));
            raw.push_back({i, tail_kind, 1});
            auto tail = to_raw(y);
            raw.insert(raw.end(), tail.begin(), tail.end());
            Element part = simplify_word(raw, coeff);
            injected.add(part);
        }
        const TracePoly via_expansion = markov_trace_element(injected, n);
        const TracePoly plain = markov_trace(concat(x, y, n));
        res.record(via_expansion == plain,
                   "inverse consistency on " + render(x) + " | " + render(y));
    }

    // pre-skein identity at the trace level
    for (int k = 0; k < cases_each; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = 1 + static_cast<int>(rng() % 12);
        const TiedBraid b = random_braid_with_sigma(n, len, rng());
        const auto sites = sigma_sites(b);
        const std::size_t site = sites[rng() % sites.size()];
        const SkeinVariants v = skein_variants(b, site);
        const TracePoly rp = markov_trace(v.plus);
        const TracePoly rm = markov_trace(v.minus);
        const TracePoly rt = markov_trace(v.tied);
        const TracePoly rpt = markov_trace(v.plus_tied);
        const TracePoly cpos = TracePoly(LaurentU(1) - LaurentU::u_pow(-1));
        res.record(rp - rm == cpos * rt + cpos * rpt, "pre-skein on " + render(b));
    }

    // defining relations of the monoid in random contexts
    const std::size_t relation_count = relation_instances(rng).size();
    for (std::size_t rel_idx = 0; rel_idx < relation_count; ++rel_idx) {
        for (int k = 0; k < cases_each; ++k) {
            const RelationCase rel = relation_instances(rng)[rel_idx];
            {
                const int n = std::max(rel.min_strands,
                                       2 + static_cast<int>(rng() % 4));
                const TiedBraid x = random_braid(n, static_cast<int>(rng() % 5), rng());
                const TiedBraid y = random_braid(n, static_cast<int>(rng() % 5), rng());
                TiedBraid lhs, rhs;
                lhs.strands = rhs.strands = n;
                lhs.letters = x.letters;
                lhs.letters.insert(lhs.letters.end(), rel.lhs.begin(), rel.lhs.end());
                lhs.letters.insert(lhs.letters.end(), y.letters.begin(), y.letters.end());
                rhs.letters = x.letters;
                rhs.letters.insert(rhs.letters.end(), rel.rhs.begin(), rel.rhs.end());
                rhs.letters.insert(rhs.letters.end(), y.letters.begin(), y.letters.end());
                res.record(markov_trace(lhs) == markov_trace(rhs),
                           rel.name + " in " + render(x) + " | " + render(y));
            }
        }
    }
    return res;
}

SuiteResult verify_termination(int words, uint64_t seed) {
    SuiteResult res{"reduction termination"};
    std::mt19937_64 rng(seed);
    const EngineLimits limits{200'000};
    for (int k = 0; k < words; ++k) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int len = 1 + static_cast<int>(rng() % 20);
        std::vector<ALetter> ls;
        int prev = 0;
        for (int j = 0; j < len; ++j) {
            int idx = 1 + static_cast<int>(rng() % (n - 1));
            if (idx == prev) {
                idx = idx == n - 1 ? std::max(1, idx - 1) : idx + 1;
                if (idx == prev) break;  // n == 2 cannot alternate
            }
            ls.push_back({idx, static_cast<Gen>(rng() % 3)});
            prev = idx;
        }
        const SimpleWord w{std::move(ls)};
        try {
            EngineStats stats;
            Element r = reduce_word(w, nullptr, limits, &stats);
            bool ok = true;
            for (const auto& [word, c] : r.terms()) {
                const int m = word.max_index();
                ok = ok && (m == 0 || word.count_at(m) == 1);
            }
            res.record(ok, "non-reduced output on " + w.str());
        } catch (const std::exception& e) {
            res.record(false, std::string("budget hit: ") + e.what());
        }
    }
    return res;
}

std::vector<SuiteResult> verify_all(uint64_t seed) {
    return {
        verify_skein(200, seed),
        verify_markov(200, seed + 1),
        verify_unlink(6),
        verify_trace_axioms(100, seed + 2),
        verify_termination(1000, seed + 3),
    };
}

}  // namespace tiedlinks
