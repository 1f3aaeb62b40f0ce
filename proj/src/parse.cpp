#include "chatelet/parse.hpp"

#include <cctype>

#include "chatelet/errors.hpp"

namespace chatelet {

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Integer digits() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected digits", start);
        return Integer(s.substr(start, i - start));
    }

    Rational rational_literal() {
        Integer num = digits();
        if (eat('/')) {
            std::size_t at = i;
            Integer den = digits();
            if (sgn(den) == 0) throw ParseError("zero denominator", at);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            ++i;
            Poly e = expr();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return e;
        }
        if (c == 'x') {
            ++i;
            return Poly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(rational_literal());
        throw ParseError("expected '(', 'x' or a number", i);
    }

    Poly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Poly b = base();
        while (eat('^')) {
            std::size_t at = i;
            Integer e = digits();
            if (e > 64) throw ParseError("exponent too large", at);
            Poly acc{Rational(1)};
            for (Integer k = 0; k < e; ++k) acc = acc * b;
            b = acc;
        }
        return b;
    }

    Poly term() {
        Poly t = factor();
        while (eat('*')) t = t * factor();
        return t;
    }

    Poly expr() {
        Poly e = term();
        for (;;) {
            if (eat('+'))
                e = e + term();
            else if (eat('-'))
                e = e - term();
            else
                return e;
        }
    }
};

}  // namespace

Poly parse_poly(const std::string& text) {
    Parser p(text);
    Poly e = p.expr();
    p.skip_ws();
    if (p.i != text.size()) throw ParseError("trailing input", p.i);
    return e;
}

Rational parse_rational(const std::string& text) {
    Parser p(text);
    int sign = 1;
    for (;;) {
        if (p.eat('-'))
            sign = -sign;
        else if (p.eat('+'))
            ;
        else
            break;
    }
    Rational r = p.rational_literal();
    p.skip_ws();
    if (p.i != text.size()) throw ParseError("trailing input", p.i);
    return sign < 0 ? Rational(-r) : r;
}

}  // namespace chatelet
