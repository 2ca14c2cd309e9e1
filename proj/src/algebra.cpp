#include "tiedlinks/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace tiedlinks {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::T: return "T";
        case Gen::E: return "E";
        case Gen::ET: return "ET";
    }
    return "?";
}

SimpleWord::SimpleWord(std::vector<ALetter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
        if (letters_[i].index == letters_[i + 1].index) {
            throw std::logic_error("not a simple word: repeated index at position " +
                                   std::to_string(i));
        }
    }
    for (const auto& l : letters_) {
        if (l.index < 1) throw std::logic_error("letter index must be >= 1");
    }
}

int SimpleWord::max_index() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.index);
    return m;
}

std::size_t SimpleWord::count_at(int index) const {
    std::size_t c = 0;
    for (const auto& l : letters_) c += (l.index == index);
    return c;
}

std::string SimpleWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) os << '.';
        os << gen_name(l.kind) << l.index;
        first = false;
    }
    return os.str();
}

void Element::add(const SimpleWord& w, const TracePoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
}

void Element::scale(const TracePoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
}

TracePoly Element::coefficient(const SimpleWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? TracePoly() : it->second;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << w.str();
        first = false;
    }
    return os.str();
}

}  // namespace tiedlinks
