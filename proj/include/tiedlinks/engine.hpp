#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tiedlinks/algebra.hpp"
#include "tiedlinks/braid.hpp"

namespace tiedlinks {

/// Input letter of the simplifier: T_i^power, E_i, or ET_i.  `power` is
/// meaningful for kind T only.
struct RawLetter {
    int index = 1;
    Gen kind = Gen::T;
    long power = 1;

    static RawLetter t(int i, long e = 1) { return {i, Gen::T, e}; }
    static RawLetter e(int i) { return {i, Gen::E, 1}; }
    static RawLetter et(int i) { return {i, Gen::ET, 1}; }
};

/// When `os` is set, every rewrite emits one line
///   RULE <name>: <word> -> <element>
/// Not a stability-guaranteed format.
struct EngineLog {
    std::ostream* os = nullptr;
};

struct EngineLimits {
    std::size_t max_steps = 1'000'000;  // per reduce call; see the measure note
};

struct EngineStats {
    std::size_t steps = 0;
};

/// Product of two same-index letters as a sum of coeff * (single letter or
/// identity).  Derived from the quadratic, idempotent and commutation
/// relations at one index; see the table in engine.cpp.
struct FusionAddend {
    LaurentU coeff;
    std::optional<Gen> kind;  // nullopt = identity
};
const std::vector<FusionAddend>& fuse(Gen x, Gen y);

/// T_i^e = base + tail(e) * (E_i + ET_i), base = 1 for even e, T_i for odd e.
/// tail(0) = tail(1) = 0; tail(-1) = u^-1 - 1; tail(2) = u - 1.
LaurentU sigma_power_tail(long e);

/// One addend of a reduction-table right-hand side.  Letter positions name
/// the index relative to the matched pattern: 0 -> i, 1 -> i-1.
struct TableAddend {
    LaurentU coeff;
    std::vector<std::pair<int, Gen>> word;
};

/// The three-letter reduction table: X_i Y_{i-1} Z_i -> sum of words holding
/// exactly one letter of index i.  27 entries, one per kind triple.
const std::vector<TableAddend>& reduction_rule(Gen x, Gen y, Gen z);

/// Rewrites coeff * raw into a linear combination of simple words: merges
/// consecutive equal-index T powers, expands remaining powers, and fuses
/// same-index neighbours until every addend is simple.
Element simplify_word(const std::vector<RawLetter>& raw, const LaurentU& coeff = LaurentU(1),
                      const EngineLog* log = nullptr);

/// Image of a tied braid word under sigma_i -> T_i, eta_i -> E_i, with
/// products distributed and simplified.
Element represent(const TiedBraid& b, const EngineLog* log = nullptr);

/// Rewrites a simple word into a linear combination of simple words, each
/// holding at most one letter of its own maximum index.
Element reduce_word(const SimpleWord& w, const EngineLog* log = nullptr,
                    const EngineLimits& limits = {}, EngineStats* stats = nullptr);

Element reduce_element(const Element& e, const EngineLog* log = nullptr,
                       const EngineLimits& limits = {}, EngineStats* stats = nullptr);

/// Applies the trace rules at top index m: addends W g_m V with g_m of kind E
/// pick up a factor B, kinds T and ET a factor A, and W V is re-simplified;
/// addends without an index-m letter pass through.  Throws std::logic_error
/// when an addend holds two index-m letters.
Element contract(const Element& e, int m, const EngineLog* log = nullptr);

/// The Markov trace of a tied braid word: represent, then alternate
/// reduction and contraction from index strands-1 down to 1.
TracePoly markov_trace(const TiedBraid& b, const EngineLog* log = nullptr);

/// Trace of an arbitrary element of the algebra on `strands` strands.
TracePoly markov_trace_element(Element e, int strands, const EngineLog* log = nullptr);

}  // namespace tiedlinks
