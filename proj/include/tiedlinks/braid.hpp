#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tiedlinks {

enum class BraidKind : uint8_t { Sigma, Eta };

/// One letter of a tied braid word: sigma_i^power or eta_i.
struct BraidLetter {
    int index = 1;                       // generator subscript, >= 1
    BraidKind kind = BraidKind::Sigma;
    long power = 1;                      // nonzero; meaningful for Sigma only

    static BraidLetter sigma(int i, long e = 1) { return {i, BraidKind::Sigma, e}; }
    static BraidLetter eta(int i) { return {i, BraidKind::Eta, 1}; }

    bool operator==(const BraidLetter& o) const = default;
};

/// A tied braid word: strand count plus letter sequence.  The strand count is
/// part of the input (the invariant's normalization depends on it), and may
/// exceed 1 + max index: trivial top strands are allowed.
struct TiedBraid {
    int strands = 1;
    std::vector<BraidLetter> letters;

    bool operator==(const TiedBraid& o) const = default;
};

/// Throws std::invalid_argument when a letter violates index/power bounds.
void validate(const TiedBraid& b);

/// Grammar (whitespace-separated tokens): s<i>, s<i>^<e>, e<i>.  Empty input
/// is the identity braid.  When `strands` is omitted, n = 1 + max index
/// (n = 1 for the empty word).  Throws ParseError / std::invalid_argument.
TiedBraid parse_braid(const std::string& text, std::optional<int> strands = std::nullopt);

/// Canonical text form; parse_braid(render(b)) == b up to explicit strands.
std::string render(const TiedBraid& b);

/// Sum of sigma powers; eta letters contribute 0.
long exponent(const TiedBraid& b);

/// g b g^-1 for a sigma letter g.  Ties are not invertible in the monoid, so
/// conjugation by an eta letter is rejected (std::invalid_argument).
TiedBraid conjugate(const TiedBraid& b, const BraidLetter& g);

enum class MarkovMove : uint8_t { StabPos, StabNeg, StabPosTied, StabNegTied };

/// Appends sigma_n^{+-1} (and eta_n for the tied variants) and increments the
/// strand count.  The closure of the result is tie-isotopic to that of b.
TiedBraid markov_move(const TiedBraid& b, MarkovMove move);

/// Letters rotated left by k (k may be negative); strands unchanged.
TiedBraid cyclic_rotate(const TiedBraid& b, long k);

/// The four words of the skein disc at `site`: identical outside the site,
/// carrying sigma_i, sigma_i^-1, eta_i, and eta_i sigma_i there.
struct SkeinVariants {
    TiedBraid plus, minus, tied, plus_tied;
};

/// `site` must hold a sigma letter with power +-1 (callers pre-split powers);
/// otherwise throws std::invalid_argument.
SkeinVariants skein_variants(const TiedBraid& b, std::size_t site);

/// The fifth disc used by the companion skein rules: eta_i sigma_i^-1 at the site.
TiedBraid tied_negative_variant(const TiedBraid& b, std::size_t site);

/// Deterministic pseudo-random word over {sigma_i^{+-1}, eta_i : 1 <= i <= n-1}.
/// Requires n >= 2 (or length == 0).
TiedBraid random_braid(int n, int length, uint64_t seed);

}  // namespace tiedlinks
