#include "tiedlinks/expr.hpp"

#include <cctype>

#include "tiedlinks/errors.hpp"

namespace tiedlinks {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExtScalar parse() {
        ExtScalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing junk", pos_);
        return v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExtScalar expr() {
        ExtScalar v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    ExtScalar term() {
        ExtScalar v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                v *= factor().inverse();
            } else {
                return v;
            }
        }
    }

    ExtScalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        ExtScalar v = atom();
        if (eat('^')) {
            long k = integer();
            v = v.pow(k);
        }
        return v;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
            any = true;
        }
        if (!any) throw ParseError("expected integer exponent", start);
        return neg ? -v : v;
    }

    ExtScalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExtScalar v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Rational q(text_.substr(start, pos_ - start));
            return ExtScalar(RationalFn(q));
        }
        ++pos_;
        switch (c) {
            case 'u': return ExtScalar(RationalFn(TracePoly(LaurentU::u_pow(1))));
            case 'z': return ExtScalar(RationalFn(TracePoly::var_a()));
            case 't': return ExtScalar(RationalFn(TracePoly::var_b()));
            case 'w': return ExtScalar::w();
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
    }
};

}  // namespace

ExtScalar parse_paper_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace tiedlinks
