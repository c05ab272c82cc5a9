#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

inline constexpr int kDefaultNilpotencyCap = 512;

// A k-derivation on the polynomial ring, given by its variable images and
// extended to everything else by linearity and the Leibniz rule.
class Derivation {
  public:
    Derivation(Ring ring, std::vector<Polynomial> images);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(int var) const { return images_.at(var); }

    Polynomial apply(const Polynomial& f) const;
    Polynomial iterate(const Polynomial& f, int n) const;

    bool operator==(const Derivation& o) const {
        return same_ring(ring_, o.ring_) && images_ == o.images_;
    }

  private:
    Ring ring_;
    std::vector<Polynomial> images_;
};

// Triangularity witness: an ordering v1..vn with delta(v_i) in k[v1..v_{i-1}].
// Sufficient (not necessary) for local nilpotency; every catalog derivation
// is triangular.
std::optional<std::vector<std::string>> triangular_order(const Derivation& d);

struct DeltaDegree {
    enum class Status { MinusInfinity, Finite, ExceededCap };
    Status status;
    int value = 0; // meaningful only when Finite

    static DeltaDegree minus_infinity() { return {Status::MinusInfinity, 0}; }
    static DeltaDegree finite(int n) { return {Status::Finite, n}; }
    static DeltaDegree exceeded() { return {Status::ExceededCap, 0}; }

    bool is_finite() const { return status == Status::Finite; }
    std::string to_string() const;
};

// nu(f): smallest n with delta^{n+1}(f) = 0; -infinity for f = 0.
DeltaDegree nu(const Derivation& d, const Polynomial& f, int cap = kDefaultNilpotencyCap);

struct PhiT {
    Ring extended_ring; // base variables plus fresh "t"
    Polynomial value;   // sum_i delta^i(f)/i! * t^i
};

PhiT phi_t(const Derivation& d, const Polynomial& f, int cap = kDefaultNilpotencyCap);

// phi_{-u}(f) = sum_i delta^i(f) (-u)^i / i!, for a slice u (delta(u) = 1).
// The result is a kernel element.
Polynomial phi_minus_u(const Derivation& d, const Polynomial& u, const Polynomial& f,
                       int cap = kDefaultNilpotencyCap);

// numerator / denominator_base^power in B[a^{-1}], where delta(a) = 0.
// Normalized: when power > 0 the base does not divide the numerator.
struct LocalizedElement {
    Polynomial numerator;
    Polynomial denominator_base;
    int power = 0;

    bool operator==(const LocalizedElement& o) const {
        return numerator == o.numerator && denominator_base == o.denominator_base &&
               power == o.power;
    }
    std::string to_string() const;
};

// Kernel generators over B[a^{-1}] from a local slice u' (a = delta(u') a
// nonzero kernel element): phi_{-u'/a} applied to each generator.
std::vector<LocalizedElement> local_slice_kernel(const Derivation& d, const Polynomial& u_prime,
                                                 const std::vector<Polynomial>& generators,
                                                 int cap = kDefaultNilpotencyCap);

// Rebuild the derivation over a ring with the same arity but new names.
Derivation rename_derivation(const Derivation& d, const std::vector<std::string>& new_names);

} // namespace lnd
