#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/rational.hpp"
#include "lnd/ring.hpp"

namespace lnd {

// Sparse multivariate polynomial over Q. Terms are kept in grevlex-descending
// order so iteration starts at the leading term and printing is deterministic.
// Values are immutable in spirit: every operation returns a fresh polynomial.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const Rational& c);
    static Polynomial variable(const Ring& ring, int index);
    static Polynomial variable(const Ring& ring, const std::string& name);
    static Polynomial monomial(const Ring& ring, const Monomial& m, const Rational& c);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 for zero polynomial
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int degree() const; // total degree, -1 for zero

    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int e) const; // e >= 0

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial partial_derivative(int var) const;
    Polynomial partial_derivative(const std::string& var) const;

    // Leading term under the given order (grevlex default); zero poly has none.
    std::optional<std::pair<Monomial, Rational>> leading_term(TermOrder order = TermOrder::Grevlex) const;

    // Map this polynomial into a ring that contains all our variables (by
    // name, positions may differ). Throws DomainError when one is missing.
    Polynomial rename_into(const Ring& target) const;

    std::string to_string() const;

    // Construction helper used by the parser and arithmetic: accumulates a
    // term, dropping it if the coefficient cancels to zero.
    void add_term(const Monomial& m, const Rational& c);

  private:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    Ring ring_;
    TermMap terms_;
};

void require_same_ring(const Polynomial& f, const Polynomial& g);

// Quotient f/g when g divides f exactly; nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace lnd
