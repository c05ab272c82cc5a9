#include "lnd/parser.hpp"

#include <cctype>

namespace lnd {

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') { // comment to end of line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        int pos = static_cast<int>(i);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, text.substr(i, j - i), pos});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Int, text.substr(i, j - i), pos});
            i = j;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Kind::Symbol, "->", pos});
            i += 2;
        } else if (std::string("+-*/^()[]{}=;:,").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), pos});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                             std::to_string(i));
        }
    }
    out.push_back({Token::Kind::End, "", static_cast<int>(text.size())});
    return out;
}

bool TokenStream::accept_symbol(const std::string& s) {
    if (peek().kind == Token::Kind::Symbol && peek().text == s) {
        next();
        return true;
    }
    return false;
}

void TokenStream::expect_symbol(const std::string& s) {
    if (!accept_symbol(s))
        fail("expected '" + s + "'");
}

std::string TokenStream::expect_ident() {
    if (peek().kind != Token::Kind::Ident)
        fail("expected identifier");
    return next().text;
}

std::string TokenStream::expect_int() {
    if (peek().kind != Token::Kind::Int)
        fail("expected integer");
    return next().text;
}

void TokenStream::fail(const std::string& message) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + " but found " + got + " at position " + std::to_string(t.pos));
}

namespace {

int parse_uint_checked(TokenStream& ts, const char* what) {
    std::string digits = ts.expect_int();
    if (digits.size() > 6)
        throw ParseError(std::string(what) + " too large: " + digits);
    return std::stoi(digits);
}

Polynomial parse_atom(TokenStream& ts, const Ring& ring) {
    const Token& t = ts.peek();
    if (t.kind == Token::Kind::Int) {
        Integer num(ts.next().text);
        if (ts.accept_symbol("/")) {
            if (ts.peek().kind != Token::Kind::Int)
                ts.fail("division is only allowed in rational constants; expected integer denominator");
            Integer den(ts.next().text);
            if (den == 0)
                throw ParseError("division by zero in rational constant");
            return Polynomial::constant(ring, make_rational(num, den));
        }
        return Polynomial::constant(ring, Rational(num));
    }
    if (t.kind == Token::Kind::Ident) {
        std::string name = ts.next().text;
        if (!ring->has_variable(name))
            throw ParseError("unknown variable: " + name);
        return Polynomial::variable(ring, name);
    }
    if (ts.accept_symbol("(")) {
        Polynomial inner = parse_poly_expr(ts, ring);
        ts.expect_symbol(")");
        return inner;
    }
    ts.fail("expected a number, variable, or parenthesized expression");
}

Polynomial parse_factor(TokenStream& ts, const Ring& ring) {
    Polynomial base = parse_atom(ts, ring);
    if (ts.accept_symbol("^")) {
        if (ts.peek().kind != Token::Kind::Int)
            ts.fail("exponent must be a non-negative integer");
        int e = parse_uint_checked(ts, "exponent");
        return base.pow(e);
    }
    return base;
}

Polynomial parse_term(TokenStream& ts, const Ring& ring) {
    Polynomial f = parse_factor(ts, ring);
    while (ts.accept_symbol("*"))
        f = f * parse_factor(ts, ring);
    if (ts.peek().kind == Token::Kind::Symbol && ts.peek().text == "/")
        throw ParseError("division is only allowed in rational constants (position " +
                         std::to_string(ts.peek().pos) + ")");
    return f;
}

} // namespace

Polynomial parse_poly_expr(TokenStream& ts, const Ring& ring) {
    bool negate = false;
    if (ts.accept_symbol("-"))
        negate = true;
    else
        ts.accept_symbol("+");
    Polynomial f = parse_term(ts, ring);
    if (negate) f = -f;
    while (true) {
        if (ts.accept_symbol("+"))
            f = f + parse_term(ts, ring);
        else if (ts.accept_symbol("-"))
            f = f - parse_term(ts, ring);
        else
            break;
    }
    return f;
}

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    TokenStream ts(tokenize(text));
    Polynomial f = parse_poly_expr(ts, ring);
    if (!ts.at_end())
        ts.fail("trailing input after polynomial");
    return f;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Ring& ring) {
    TokenStream ts(tokenize(text));
    std::vector<Polynomial> out;
    out.push_back(parse_poly_expr(ts, ring));
    while (ts.accept_symbol(","))
        out.push_back(parse_poly_expr(ts, ring));
    if (!ts.at_end())
        ts.fail("trailing input after polynomial list");
    return out;
}

} // namespace lnd
