#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lnd/errors.hpp"

namespace lnd {

// Ordered list of distinct variable names. All polynomials refer to their
// ring through a shared_ptr; two descriptors with equal name lists are the
// same ring for compatibility purposes.
class RingDescriptor {
  public:
    explicit RingDescriptor(std::vector<std::string> variables);

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(int i) const { return vars_.at(i); }
    bool has_variable(const std::string& name) const { return index_.count(name) != 0; }
    int index(const std::string& name) const;

    bool operator==(const RingDescriptor& other) const { return vars_ == other.vars_; }

  private:
    std::vector<std::string> vars_;
    std::map<std::string, int> index_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring make_ring(std::vector<std::string> variables);
// Base variables first, then extras; throws DomainError on a name collision.
Ring extend_ring(const Ring& base, const std::vector<std::string>& extra);

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector, length = ring arity.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b); // a | b componentwise
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // assumes divisibility
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order, ties by the ring's variable order.
// This is the canonical storage/printing order.
bool grevlex_greater(const Monomial& a, const Monomial& b);
bool lex_greater(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

enum class TermOrder { Grevlex, Lex };

bool mono_greater(const Monomial& a, const Monomial& b, TermOrder order);

} // namespace lnd
