#pragma once

#include <string>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

// Token stream shared by the polynomial grammar and the definition DSL.
struct Token {
    enum class Kind { Ident, Int, Symbol, End };
    Kind kind;
    std::string text;
    int pos; // byte offset, for error messages
};

std::vector<Token> tokenize(const std::string& text);

class TokenStream {
  public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[i_]; }
    const Token& next() { return tokens_[i_ < tokens_.size() - 1 ? i_++ : i_]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool accept_symbol(const std::string& s);
    void expect_symbol(const std::string& s);
    std::string expect_ident();
    std::string expect_int();
    [[noreturn]] void fail(const std::string& message) const;

  private:
    std::vector<Token> tokens_;
    size_t i_ = 0;
};

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | ident | '(' expr ')'
//   rational := uint ('/' uint)?
// Whitespace insignificant. Unknown variables, stray '/', and non-integer
// exponents raise ParseError.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);
Polynomial parse_poly_expr(TokenStream& ts, const Ring& ring);

// Comma-separated list of polynomials ("x^2, x*y").
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Ring& ring);

} // namespace lnd
