#include "tiedlinks/rational.hpp"

#include <stdexcept>

namespace tiedlinks {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace tiedlinks
