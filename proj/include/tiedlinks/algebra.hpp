#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tiedlinks/trace_poly.hpp"

namespace tiedlinks {

/// Generator kinds of the braids-and-ties algebra at one index: the braid
/// generator T_i, the idempotent tie E_i, and the single element
/// ET_i = E_i T_i = T_i E_i (the two commute at equal index).
enum class Gen : uint8_t { T = 0, E = 1, ET = 2 };

std::string gen_name(Gen g);

struct ALetter {
    int index = 1;
    Gen kind = Gen::T;

    auto operator<=>(const ALetter&) const = default;
};

/// A word whose consecutive letters carry distinct indices and appear to the
/// first power.  All rewriting below preserves this shape.
class SimpleWord {
public:
    SimpleWord() = default;
    explicit SimpleWord(std::vector<ALetter> letters);  // throws if not simple

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<ALetter>& letters() const { return letters_; }

    /// 0 for the empty word.
    int max_index() const;
    std::size_t count_at(int index) const;

    auto operator<=>(const SimpleWord&) const = default;

    std::string str() const;

private:
    std::vector<ALetter> letters_;
};

/// Finite formal sum of coefficient * simple-word addends.  Coefficients are
/// trace polynomials: words produced by the representation carry pure
/// Laurent-in-u coefficients, and contraction multiplies in the trace
/// parameters A and B without leaving the type.
class Element {
public:
    Element() = default;

    static Element unit() {
        Element e;
        e.add(SimpleWord{}, TracePoly(1));
        return e;
    }

    /// Merges with any existing addend for the same word; zero results drop.
    void add(const SimpleWord& w, const TracePoly& coeff);
    void add(const Element& o);
    void scale(const TracePoly& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<SimpleWord, TracePoly>& terms() const { return terms_; }
    TracePoly coefficient(const SimpleWord& w) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<SimpleWord, TracePoly> terms_;
};

}  // namespace tiedlinks
