#include "tiedlinks/braid.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tiedlinks/errors.hpp"

namespace tiedlinks {

void validate(const TiedBraid& b) {
    if (b.strands < 1) throw std::invalid_argument("strand count must be >= 1");
    for (const auto& l : b.letters) {
        if (l.index < 1) throw std::invalid_argument("generator index must be >= 1");
        if (l.index > b.strands - 1) {
            throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                        " needs more than " + std::to_string(b.strands) +
                                        " strands");
        }
        if (l.kind == BraidKind::Sigma && l.power == 0) {
            throw std::invalid_argument("sigma power must be nonzero");
        }
    }
}

namespace {

long parse_long(const std::string& text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(std::string("expected ") + what, start);
    return std::stol(text.substr(start, pos - start));
}

}  // namespace

TiedBraid parse_braid(const std::string& text, std::optional<int> strands) {
    TiedBraid b;
    std::size_t pos = 0;
    int max_index = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        const std::size_t token_start = pos;
        const char head = text[pos];
        if (head != 's' && head != 'e') {
            throw ParseError("expected token 's<i>', 's<i>^<e>' or 'e<i>'", token_start);
        }
        ++pos;
        long index = parse_long(text, pos, "generator index");
        if (index < 1) throw ParseError("generator index must be >= 1", token_start);
        long power = 1;
        if (pos < text.size() && text[pos] == '^') {
            if (head == 'e') throw ParseError("eta letters take no power", pos);
            ++pos;
            power = parse_long(text, pos, "integer exponent");
            if (power == 0) throw ParseError("sigma power must be nonzero", token_start);
        }
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("junk after token", pos);
        }
        if (head == 's') {
            b.letters.push_back(BraidLetter::sigma(static_cast<int>(index), power));
        } else {
            b.letters.push_back(BraidLetter::eta(static_cast<int>(index)));
        }
        max_index = std::max(max_index, static_cast<int>(index));
    }
    if (strands) {
        if (*strands <= max_index) {
            throw std::invalid_argument("strands = " + std::to_string(*strands) +
                                        " but the word uses index " + std::to_string(max_index));
        }
        b.strands = *strands;
    } else {
        b.strands = max_index + 1;
    }
    validate(b);
    return b;
}

std::string render(const TiedBraid& b) {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : b.letters) {
        if (!first) os << ' ';
        first = false;
        if (l.kind == BraidKind::Eta) {
            os << 'e' << l.index;
        } else {
            os << 's' << l.index;
            if (l.power != 1) os << '^' << l.power;
        }
    }
    return os.str();
}

long exponent(const TiedBraid& b) {
    long e = 0;
    for (const auto& l : b.letters) {
        if (l.kind == BraidKind::Sigma) e += l.power;
    }
    return e;
}

TiedBraid conjugate(const TiedBraid& b, const BraidLetter& g) {
    if (g.kind != BraidKind::Sigma) {
        throw std::invalid_argument("conjugation by a tie is not defined (no inverse)");
    }
    if (g.index > b.strands - 1) {
        throw std::invalid_argument("conjugator index exceeds strand count");
    }
    TiedBraid r;
    r.strands = b.strands;
    r.letters.reserve(b.letters.size() + 2);
    r.letters.push_back(g);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    r.letters.push_back(BraidLetter::sigma(g.index, -g.power));
    return r;
}

TiedBraid markov_move(const TiedBraid& b, MarkovMove move) {
    TiedBraid r = b;
    const int n = b.strands;
    switch (move) {
        case MarkovMove::StabPos:
            r.letters.push_back(BraidLetter::sigma(n, 1));
            break;
        case MarkovMove::StabNeg:
            r.letters.push_back(BraidLetter::sigma(n, -1));
            break;
        case MarkovMove::StabPosTied:
            r.letters.push_back(BraidLetter::sigma(n, 1));
            r.letters.push_back(BraidLetter::eta(n));
            break;
        case MarkovMove::StabNegTied:
            r.letters.push_back(BraidLetter::sigma(n, -1));
            r.letters.push_back(BraidLetter::eta(n));
            break;
    }
    r.strands = n + 1;
    return r;
}

TiedBraid cyclic_rotate(const TiedBraid& b, long k) {
    TiedBraid r = b;
    if (b.letters.empty()) return r;
    const long n = static_cast<long>(b.letters.size());
    long s = ((k % n) + n) % n;
    std::rotate(r.letters.begin(), r.letters.begin() + s, r.letters.end());
    return r;
}

namespace {

TiedBraid with_site(const TiedBraid& b, std::size_t site, std::vector<BraidLetter> repl) {
    TiedBraid r;
    r.strands = b.strands;
    r.letters.reserve(b.letters.size() + repl.size());
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.begin() + site);
    r.letters.insert(r.letters.end(), repl.begin(), repl.end());
    r.letters.insert(r.letters.end(), b.letters.begin() + site + 1, b.letters.end());
    return r;
}

void check_site(const TiedBraid& b, std::size_t site) {
    if (site >= b.letters.size()) throw std::invalid_argument("site out of range");
    const BraidLetter& l = b.letters[site];
    if (l.kind != BraidKind::Sigma || (l.power != 1 && l.power != -1)) {
        throw std::invalid_argument(
            "skein site must hold a sigma letter with power +-1 (pre-split powers)");
    }
}

}  // namespace

SkeinVariants skein_variants(const TiedBraid& b, std::size_t site) {
    check_site(b, site);
    const int i = b.letters[site].index;
    SkeinVariants v;
    v.plus = with_site(b, site, {BraidLetter::sigma(i, 1)});
    v.minus = with_site(b, site, {BraidLetter::sigma(i, -1)});
    v.tied = with_site(b, site, {BraidLetter::eta(i)});
    v.plus_tied = with_site(b, site, {BraidLetter::eta(i), BraidLetter::sigma(i, 1)});
    return v;
}

TiedBraid tied_negative_variant(const TiedBraid& b, std::size_t site) {
    check_site(b, site);
    const int i = b.letters[site].index;
    return with_site(b, site, {BraidLetter::eta(i), BraidLetter::sigma(i, -1)});
}

TiedBraid random_braid(int n, int length, uint64_t seed) {
    if (length < 0) throw std::invalid_argument("negative length");
    if (length > 0 && n < 2) throw std::invalid_argument("need n >= 2 to emit letters");
    TiedBraid b;
    b.strands = std::max(n, 1);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < length; ++k) {
        // engine output used directly so the sequence is stable across platforms
        const uint64_t r = rng();
        const int idx = 1 + static_cast<int>((r / 3) % static_cast<uint64_t>(n - 1));
        switch (r % 3) {
            case 0: b.letters.push_back(BraidLetter::sigma(idx, 1)); break;
            case 1: b.letters.push_back(BraidLetter::sigma(idx, -1)); break;
            default: b.letters.push_back(BraidLetter::eta(idx)); break;
        }
    }
    return b;
}

}  // namespace tiedlinks
