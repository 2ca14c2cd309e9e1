#include "tiedlinks/engine.hpp"

#include <array>
#include <map>
#include <ostream>
#include <stdexcept>

namespace tiedlinks {

namespace {

LaurentU lone() { return LaurentU(1); }
LaurentU lu() { return LaurentU::u_pow(1); }
LaurentU lu_minus_1() { return LaurentU::u_pow(1) - LaurentU(1); }
LaurentU one_minus_lu() { return LaurentU(1) - LaurentU::u_pow(1); }

int kind_idx(Gen g) { return static_cast<int>(g); }

void log_rule(const EngineLog* log, const char* name, const std::string& from,
              const Element& to) {
    if (log && log->os) {
        *log->os << "RULE " << name << ": " << from << " -> " << to.str() << "\n";
    }
}

}  // namespace

// Products of two generators at the same index.  The whole subalgebra they
// span is {1, T, E, ET}, closed under multiplication:
//
//   E*E   = E
//   E*T   = T*E          = ET          (the ET letter)
//   E*ET  = E*(E*T)      = E*T   = ET
//   ET*E  = (T*E)*E      = T*E   = ET
//   T*T   = 1 + (u-1)E + (u-1)ET       (quadratic relation)
//   T*ET  = (T*T)*E      = E + (u-1)E + (u-1)ET = u E + (u-1) ET
//   ET*T  = E*(T*T)      = the same
//   ET*ET = E*E*(T*T)    = E*(T*T)     = u E + (u-1) ET
//
// Fusing restores simplicity after powers are expanded and after contraction
// splices two halves of a word together.
const std::vector<FusionAddend>& fuse(Gen x, Gen y) {
    static const std::array<std::vector<FusionAddend>, 9> kTable = [] {
        std::array<std::vector<FusionAddend>, 9> t;
        auto at = [&t](Gen a, Gen b) -> std::vector<FusionAddend>& {
            return t[kind_idx(a) * 3 + kind_idx(b)];
        };
        at(Gen::T, Gen::T) = {{lone(), std::nullopt},
                              {lu_minus_1(), Gen::E},
                              {lu_minus_1(), Gen::ET}};
        at(Gen::T, Gen::E) = {{lone(), Gen::ET}};
        at(Gen::E, Gen::T) = {{lone(), Gen::ET}};
        at(Gen::T, Gen::ET) = {{lu(), Gen::E}, {lu_minus_1(), Gen::ET}};
        at(Gen::ET, Gen::T) = {{lu(), Gen::E}, {lu_minus_1(), Gen::ET}};
        at(Gen::E, Gen::E) = {{lone(), Gen::E}};
        at(Gen::E, Gen::ET) = {{lone(), Gen::ET}};
        at(Gen::ET, Gen::E) = {{lone(), Gen::ET}};
        at(Gen::ET, Gen::ET) = {{lu(), Gen::E}, {lu_minus_1(), Gen::ET}};
        return t;
    }();
    return kTable[kind_idx(x) * 3 + kind_idx(y)];
}

// T^e = base + tail(e)*(E + ET).  The tails follow from the quadratic
// relation: with F = E + ET one has T*F = F*T = u F and F*F = (1+u) F, so
// T^2 = 1 + (u-1)F extends to
//   even e:  tail = (u^e - 1)/(u + 1)
//   odd  e:  tail = (u^e - u)/(u + 1)
// expanded below as explicit alternating sums.
LaurentU sigma_power_tail(long e) {
    LaurentU tail;
    if (e == 0 || e == 1) return tail;
    const bool even = (e % 2) == 0;
    if (e > 0) {
        if (even) {
            for (long k = 0; k <= e - 1; ++k)
                tail += LaurentU::u_pow(k, Rational((k % 2 == 0) ? -1 : 1));
        } else {
            for (long k = 1; k <= e - 1; ++k)
                tail += LaurentU::u_pow(k, Rational((k % 2 == 0) ? 1 : -1));
        }
    } else {
        if (even) {
            for (long k = 1; k <= -e; ++k)
                tail += LaurentU::u_pow(-k, Rational((k % 2 == 0) ? 1 : -1));
        } else {
            for (long k = 0; k <= -e; ++k)
                tail += LaurentU::u_pow(-k, Rational((k % 2 == 0) ? -1 : 1));
        }
    }
    return tail;
}

// X_i Y_{i-1} Z_i patterns.  Every right-hand side keeps exactly one letter
// of index i, so one application strictly lowers the index-i letter count.
// 0 tags index i, 1 tags index i-1.
const std::vector<TableAddend>& reduction_rule(Gen x, Gen y, Gen z) {
    using W = std::vector<std::pair<int, Gen>>;
    static const std::array<std::vector<TableAddend>, 27> kTable = [] {
        std::array<std::vector<TableAddend>, 27> t;
        auto at = [&t](Gen a, Gen b, Gen c) -> std::vector<TableAddend>& {
            return t[kind_idx(a) * 9 + kind_idx(b) * 3 + kind_idx(c)];
        };
        const std::pair<int, Gen> hiT{0, Gen::T}, hiE{0, Gen::E}, hiET{0, Gen::ET};
        const std::pair<int, Gen> loT{1, Gen::T}, loE{1, Gen::E}, loET{1, Gen::ET};

        at(Gen::E, Gen::E, Gen::E) = {{lone(), W{loE, hiE}}};
        at(Gen::E, Gen::T, Gen::E) = {{lone(), W{loET, hiE}}};
        at(Gen::E, Gen::ET, Gen::E) = {{lone(), W{loET, hiE}}};
        at(Gen::E, Gen::E, Gen::T) = {{lone(), W{loE, hiET}}};
        at(Gen::E, Gen::T, Gen::T) = {{lone(), W{loT, hiET}}};
        at(Gen::E, Gen::ET, Gen::T) = {{lone(), W{loET, hiET}}};
        at(Gen::E, Gen::E, Gen::ET) = {{lone(), W{loE, hiET}}};
        at(Gen::E, Gen::T, Gen::ET) = {{lone(), W{loET, hiET}}};
        at(Gen::E, Gen::ET, Gen::ET) = {{lone(), W{loET, hiET}}};

        at(Gen::T, Gen::E, Gen::E) = {{lone(), W{loE, hiET}}};
        at(Gen::T, Gen::T, Gen::E) = {{lone(), W{loE, hiT, loT}}};
        at(Gen::T, Gen::ET, Gen::E) = {{lone(), W{loE, hiET, loT}}};
        at(Gen::T, Gen::E, Gen::T) = {{lone(), W{loT, hiE, loT}},
                                      {one_minus_lu(), W{hiE, loET}},
                                      {lu_minus_1(), W{hiET, loE}}};
        at(Gen::T, Gen::T, Gen::T) = {{lone(), W{loT, hiT, loT}}};
        at(Gen::T, Gen::ET, Gen::T) = {{lone(), W{loT, hiET, loT}}};
        at(Gen::T, Gen::E, Gen::ET) = {{lu(), W{loE, hiE}}, {lu_minus_1(), W{loE, hiET}}};
        at(Gen::T, Gen::T, Gen::ET) = {{lone(), W{loET, hiT, loT}}};
        at(Gen::T, Gen::ET, Gen::ET) = {{lone(), W{loET, hiET, loT}}};

        at(Gen::ET, Gen::E, Gen::E) = {{lone(), W{loE, hiET}}};
        at(Gen::ET, Gen::T, Gen::E) = {{lone(), W{loE, hiET, loT}}};
        at(Gen::ET, Gen::ET, Gen::E) = {{lone(), W{loE, hiET, loT}}};
        at(Gen::ET, Gen::E, Gen::T) = {{lu(), W{loE, hiE}}, {lu_minus_1(), W{loE, hiET}}};
        at(Gen::ET, Gen::T, Gen::T) = {{lone(), W{loT, hiT, loET}}};
        at(Gen::ET, Gen::ET, Gen::T) = {{lone(), W{loET, hiET, loT}}};
        at(Gen::ET, Gen::E, Gen::ET) = {{lu(), W{loE, hiE}}, {lu_minus_1(), W{loE, hiET}}};
        at(Gen::ET, Gen::T, Gen::ET) = {{lone(), W{loET, hiET, loT}}};
        at(Gen::ET, Gen::ET, Gen::ET) = {{lone(), W{loET, hiET, loT}}};
        return t;
    }();
    return kTable[kind_idx(x) * 9 + kind_idx(y) * 3 + kind_idx(z)];
}

namespace {

using Partial = std::map<std::vector<ALetter>, LaurentU>;

void partial_add(Partial& p, std::vector<ALetter> w, LaurentU c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// Appends one letter to a simple prefix.  A same-index top letter fuses; the
// fusion result has the same index as the removed pair, so simplicity never
// breaks deeper in the prefix and no cascade is needed.
void append_letter(const std::vector<ALetter>& word, const ALetter& l, const LaurentU& c,
                   Partial& out) {
    if (word.empty() || word.back().index != l.index) {
        std::vector<ALetter> w = word;
        w.push_back(l);
        partial_add(out, std::move(w), c);
        return;
    }
    const ALetter top = word.back();
    std::vector<ALetter> base(word.begin(), word.end() - 1);
    for (const auto& fa : fuse(top.kind, l.kind)) {
        LaurentU c2 = c * fa.coeff;
        if (!fa.kind) {
            partial_add(out, base, std::move(c2));
        } else {
            std::vector<ALetter> w = base;
            w.push_back({l.index, *fa.kind});
            partial_add(out, std::move(w), std::move(c2));
        }
    }
}

// S2: consecutive equal-index T powers merge to the algebraic sum of the
// exponents (a zero sum drops the letter, possibly re-joining its
// neighbours).
std::vector<RawLetter> merge_powers(const std::vector<RawLetter>& raw) {
    std::vector<RawLetter> out;
    for (const auto& l : raw) {
        if (l.kind == Gen::T && !out.empty() && out.back().kind == Gen::T &&
            out.back().index == l.index) {
            out.back().power += l.power;
            if (out.back().power == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

}  // namespace

Element simplify_word(const std::vector<RawLetter>& raw, const LaurentU& coeff,
                      const EngineLog* log) {
    Partial cur;
    cur.emplace(std::vector<ALetter>{}, coeff);
    for (const auto& rl : merge_powers(raw)) {
        // expansion branches: (coefficient, optional single letter)
        std::vector<std::pair<LaurentU, std::optional<ALetter>>> branches;
        if (rl.kind == Gen::T && rl.power != 1) {
            const LaurentU tail = sigma_power_tail(rl.power);
            if (rl.power % 2 == 0) {
                branches.push_back({lone(), std::nullopt});
            } else {
                branches.push_back({lone(), ALetter{rl.index, Gen::T}});
            }
            branches.push_back({tail, ALetter{rl.index, Gen::E}});
            branches.push_back({tail, ALetter{rl.index, Gen::ET}});
        } else {
            branches.push_back({lone(), ALetter{rl.index, rl.kind}});
        }
        Partial next;
        for (const auto& [w, c] : cur) {
            for (const auto& [bc, bl] : branches) {
                LaurentU c2 = c * bc;
                if (c2.is_zero()) continue;
                if (!bl) {
                    partial_add(next, w, std::move(c2));
                } else {
                    append_letter(w, *bl, c2, next);
                }
            }
        }
        cur.swap(next);
    }
    Element out;
    for (auto& [w, c] : cur) out.add(SimpleWord(std::vector<ALetter>(w)), TracePoly(c));
    if (log && log->os && !raw.empty()) {
        std::string from;
        for (const auto& rl : raw) {
            if (!from.empty()) from += '.';
            from += gen_name(rl.kind) + std::to_string(rl.index);
            if (rl.kind == Gen::T && rl.power != 1) from += "^" + std::to_string(rl.power);
        }
        log_rule(log, "simplify", from, out);
    }
    return out;
}

Element represent(const TiedBraid& b, const EngineLog* log) {
    validate(b);
    std::vector<RawLetter> raw;
    raw.reserve(b.letters.size());
    for (const auto& l : b.letters) {
        if (l.kind == BraidKind::Sigma) {
            raw.push_back(RawLetter::t(l.index, l.power));
        } else {
            raw.push_back(RawLetter::e(l.index));
        }
    }
    return simplify_word(raw, lone(), log);
}

namespace {

std::vector<RawLetter> to_raw(const std::vector<ALetter>& ls) {
    std::vector<RawLetter> raw;
    raw.reserve(ls.size());
    for (const auto& l : ls) raw.push_back({l.index, l.kind, 1});
    return raw;
}

// One rewrite on a word with >= 2 letters at its maximum index.  Descends to
// the innermost pair whose gap holds at most one letter of the next index
// down, moves the commuting spectators out of the gap, and resolves the pair
// by the reduction table (one middle letter) or by fusion (none).
//
// Termination measure, lexicographic, most significant first:
//   ( #letters of index N, #letters of index N-1, ..., #letters of index 1 )
// A step at level j replaces two index-j letters by at most one and never
// touches letters of index > j, so the measure strictly decreases; word
// length never grows (table right-hand sides are no longer than the matched
// pattern and fusions shrink).  The step budget in EngineLimits is a hard
// guard far above anything the measure permits on tested sizes.
Element reduce_step(const SimpleWord& w, const EngineLog* log) {
    const auto& ls = w.letters();
    int level = w.max_index();
    std::size_t lo = 0, hi = ls.size();
    std::size_t p = 0, q = 0;
    std::vector<std::size_t> mids;
    for (;;) {
        p = lo;
        while (ls[p].index != level) ++p;
        q = p + 1;
        while (ls[q].index != level) ++q;
        mids.clear();
        for (std::size_t j = p + 1; j < q; ++j) {
            if (ls[j].index == level - 1) mids.push_back(j);
        }
        if (mids.size() < 2) break;
        lo = p + 1;
        hi = q;
        --level;
    }
    (void)hi;

    Element out;
    if (mids.empty()) {
        // all gap letters commute past the left pair member; the pair fuses
        std::vector<RawLetter> seq;
        seq.reserve(ls.size());
        for (std::size_t j = 0; j < p; ++j) seq.push_back({ls[j].index, ls[j].kind, 1});
        for (std::size_t j = p + 1; j < q; ++j) seq.push_back({ls[j].index, ls[j].kind, 1});
        seq.push_back({ls[p].index, ls[p].kind, 1});
        seq.push_back({ls[q].index, ls[q].kind, 1});
        for (std::size_t j = q + 1; j < ls.size(); ++j)
            seq.push_back({ls[j].index, ls[j].kind, 1});
        out = simplify_word(seq);
        if (log && log->os) {
            log_rule(log,
                     ("fuse[" + gen_name(ls[p].kind) + "." + gen_name(ls[q].kind) + "]").c_str(),
                     w.str(), out);
        }
        return out;
    }

    const std::size_t mid = mids.front();
    const Gen x = ls[p].kind, y = ls[mid].kind, z = ls[q].kind;
    for (const auto& addend : reduction_rule(x, y, z)) {
        std::vector<RawLetter> seq;
        seq.reserve(ls.size() + addend.word.size());
        for (std::size_t j = 0; j < p; ++j) seq.push_back({ls[j].index, ls[j].kind, 1});
        // spectators left of the middle letter commute out to the left
        for (std::size_t j = p + 1; j < mid; ++j) seq.push_back({ls[j].index, ls[j].kind, 1});
        for (const auto& [rel, kind] : addend.word) {
            seq.push_back({level - rel, kind, 1});
        }
        // spectators right of the middle letter commute out to the right
        for (std::size_t j = mid + 1; j < q; ++j) seq.push_back({ls[j].index, ls[j].kind, 1});
        for (std::size_t j = q + 1; j < ls.size(); ++j)
            seq.push_back({ls[j].index, ls[j].kind, 1});
        Element part = simplify_word(seq, addend.coeff);
        out.add(part);
    }
    if (log && log->os) {
        log_rule(log,
                 ("reduce[" + gen_name(x) + "." + gen_name(y) + "." + gen_name(z) + "]").c_str(),
                 w.str(), out);
    }
    return out;
}

bool rho_reducible(const SimpleWord& w) {
    const int m = w.max_index();
    return m == 0 || w.count_at(m) <= 1;
}

}  // namespace

Element reduce_word(const SimpleWord& w, const EngineLog* log, const EngineLimits& limits,
                    EngineStats* stats) {
    Element done;
    std::map<SimpleWord, TracePoly> work;
    work.emplace(w, TracePoly(1));
    std::size_t steps = 0;
    while (!work.empty()) {
        auto it = work.begin();
        SimpleWord cur = it->first;
        TracePoly coeff = it->second;
        work.erase(it);
        if (coeff.is_zero()) continue;
        if (rho_reducible(cur)) {
            done.add(cur, coeff);
            continue;
        }
        if (++steps > limits.max_steps) {
            throw std::runtime_error("reduction step budget exceeded on " + cur.str());
        }
        Element delta = reduce_step(cur, log);
        for (const auto& [w2, c2] : delta.terms()) {
            auto jt = work.find(w2);
            if (jt == work.end()) {
                work.emplace(w2, coeff * c2);
            } else {
                jt->second += coeff * c2;
                if (jt->second.is_zero()) work.erase(jt);
            }
        }
    }
    if (stats) stats->steps += steps;
    return done;
}

Element reduce_element(const Element& e, const EngineLog* log, const EngineLimits& limits,
                       EngineStats* stats) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        if (rho_reducible(w)) {
            out.add(w, c);
            continue;
        }
        Element r = reduce_word(w, log, limits, stats);
        r.scale(c);
        out.add(r);
    }
    return out;
}

Element contract(const Element& e, int m, const EngineLog* log) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        const auto& ls = w.letters();
        std::vector<std::size_t> at;
        for (std::size_t j = 0; j < ls.size(); ++j) {
            if (ls[j].index == m) at.push_back(j);
        }
        if (at.size() > 1) {
            throw std::logic_error("contract: addend has two index-" + std::to_string(m) +
                                   " letters: " + w.str());
        }
        if (at.empty()) {
            out.add(w, c);
            continue;
        }
        const std::size_t j = at.front();
        const Gen kind = ls[j].kind;
        const TracePoly factor =
            kind == Gen::E ? TracePoly::var_b() : TracePoly::var_a();
        std::vector<RawLetter> rest;
        rest.reserve(ls.size() - 1);
        for (std::size_t k = 0; k < ls.size(); ++k) {
            if (k != j) rest.push_back({ls[k].index, ls[k].kind, 1});
        }
        Element spliced = simplify_word(rest);
        spliced.scale(c * factor);
        if (log && log->os) {
            Element logged = spliced;
            log_rule(log, ("contract[" + gen_name(kind) + "]").c_str(), w.str(), logged);
        }
        out.add(spliced);
    }
    return out;
}

TracePoly markov_trace(const TiedBraid& b, const EngineLog* log) {
    return markov_trace_element(represent(b, log), b.strands, log);
}

TracePoly markov_trace_element(Element e, int strands, const EngineLog* log) {
    for (int m = strands - 1; m >= 1; --m) {
        e = reduce_element(e, log);
        e = contract(e, m, log);
    }
    for (const auto& [w, c] : e.terms()) {
        if (!w.empty()) {
            throw std::logic_error("trace pipeline left a non-scalar word: " + w.str());
        }
    }
    return e.coefficient(SimpleWord{});
}

}  // namespace tiedlinks
