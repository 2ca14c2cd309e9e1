#pragma once

#include <cstdint>
#include <string>

#include "tiedlinks/braid.hpp"
#include "tiedlinks/engine.hpp"
#include "tiedlinks/ext_scalar.hpp"

namespace tiedlinks {

/// The tied-link invariant of one braid word, together with the data the
/// normalization used: value = dbar^(strands-1) * w^exponent * trace.
struct InvariantValue {
    ExtScalar value;
    int strands = 1;
    long exponent = 0;
};

/// Rescales a Markov trace by dbar^(n-1) * w^e (the Jones recipe), which
/// makes the result invariant under the Markov moves.
InvariantValue normalize(const TracePoly& trace, int strands, long exponent);

/// The invariant of the closure of b.
InvariantValue invariant_F(const TiedBraid& b, const EngineLog* log = nullptr);

/// Parses an expression over {u, z, t, w, integers, + - * / ^ ( )},
/// substitutes z -> A, t -> B, rewrites w-powers via w^2 = L, and tests exact
/// equality with v.  Throws ParseError on malformed input.
bool paper_form_equal(const InvariantValue& v, const std::string& expr);

enum class SkeinRule : uint8_t { III, IV, Va, Vb };

/// Checks one skein rule exactly at the given site (which must hold a sigma
/// letter of power +-1).
bool check_skein(const TiedBraid& b, std::size_t site, SkeinRule rule = SkeinRule::III);

/// Invariance of invariant_F under the stabilization moves plus a sample of
/// conjugators and rotations drawn from `seed`.
bool check_markov_invariance(const TiedBraid& b, uint64_t seed = 1);

/// Invariant of the trivial braid on `components` strands whose last
/// `ties` + 1 strands are tied by ties (eta letters).  Asserts the closed
/// form B^ties * dbar^(components-1); throws std::logic_error on mismatch
/// and std::out_of_range when ties >= components.
InvariantValue unlink_value(int components, int ties);

/// Numeric spot-check of mirror symmetry for inputs whose closure components
/// are all tied together: evaluating the invariant of the crossing-reversed
/// word at (u, z, w) must match the original at (1/u, z, 1/w), with t induced
/// by t = z(u w^2 - 1)/(1 - u) at each point.
bool mirror_spot_check(const TiedBraid& all_tied, uint64_t seed);

}  // namespace tiedlinks
