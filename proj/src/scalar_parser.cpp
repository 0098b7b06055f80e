#include "gtrop/scalar_parser.hpp"

#include "gtrop/errors.hpp"

#include <cctype>

namespace gtrop {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    Int lex_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return Int(text.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lx;
    long long d;

    Parser(const std::string& text, long long dd) : lx(text), d(dd) {}

    // rat := ["-"] int ["/" int]
    Rat parse_rat_token() {
        bool neg = lx.accept('-');
        Int num = lx.lex_int();
        Int den = 1;
        // The "/ int" tail belongs to the rat token only when an integer
        // follows; otherwise the slash is scalar division at term level.
        std::size_t save = lx.pos;
        if (lx.accept('/')) {
            if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                std::size_t at = lx.pos;
                den = lx.lex_int();
                if (den == 0) throw ParseError("zero denominator in rational literal", at);
            } else {
                lx.pos = save;
            }
        }
        Rat q(num, den);
        return neg ? Rat(-q) : q;
    }

    ValuedScalar parse_base() {
        char c = lx.peek();
        if (c == 't') {
            ++lx.pos;
            return ValuedScalar::t_power(Rat(1), d);
        }
        if (c == '(') {
            ++lx.pos;
            ValuedScalar v = parse_expr();
            lx.expect(')', "')'");
            return v;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return ValuedScalar::from_rational(parse_rat_token(), d);
        throw ParseError("expected a number, 't', or '('", lx.pos);
    }

    ValuedScalar parse_factor() {
        ValuedScalar base = parse_base();
        if (!lx.accept('^')) return base;
        Rat e;
        if (lx.accept('(')) {
            e = parse_rat_token();
            lx.expect(')', "')'");
        } else {
            e = parse_rat_token();
        }
        return base.pow(e);
    }

    ValuedScalar parse_term() {
        ValuedScalar v = parse_factor();
        for (;;) {
            if (lx.accept('*'))
                v = v * parse_factor();
            else if (lx.accept('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }

    ValuedScalar parse_expr() {
        bool neg = false;
        if (lx.peek() == '-') {
            // Leading minus only when it is not the start of a rational
            // literal; "-3*t" negates inside the rat token, "-t" here.
            std::size_t save = lx.pos;
            ++lx.pos;
            char nxt = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(nxt))) {
                lx.pos = save;
            } else {
                neg = true;
            }
        }
        ValuedScalar v = parse_term();
        if (neg) v = -v;
        for (;;) {
            if (lx.accept('+'))
                v = v + parse_term();
            else if (lx.accept('-'))
                v = v - parse_term();
            else
                return v;
        }
    }
};

} // namespace

ValuedScalar parse_scalar(const std::string& text, long long d) {
    if (d < 1) throw MathError("exponent denominator must be a positive integer");
    Parser p(text, d);
    if (p.lx.peek() == '\0') throw ParseError("empty scalar expression", 0);
    ValuedScalar v = p.parse_expr();
    if (p.lx.peek() != '\0') throw ParseError("unexpected trailing input", p.lx.pos);
    return v;
}

} // namespace gtrop
