#pragma once

#include <gmpxx.h>
#include <string>

#include "lnd/errors.hpp"

namespace lnd {

// Exact rational coefficients. mpq_class keeps values canonical (reduced,
// positive denominator) as long as every value entering arithmetic is
// canonical, which make_rational guarantees.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// gmpxx has no long long constructors; long is 64-bit on every platform we
// build for.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(to_integer(v)); }

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace lnd
