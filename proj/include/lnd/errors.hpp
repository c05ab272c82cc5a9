#pragma once

#include <stdexcept>
#include <string>

namespace lnd {

// Violated precondition or mathematical assumption; maps to CLI exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomials, definition files); CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lnd
