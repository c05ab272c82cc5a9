#include "lnd/derivation.hpp"

#include <algorithm>
#include <set>

namespace lnd {

Derivation::Derivation(Ring ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != ring_->arity())
        throw DomainError("derivation needs exactly one image per variable");
    for (const auto& g : images_)
        if (!same_ring(g.ring(), ring_))
            throw DomainError("derivation image lives in a different ring");
}

Polynomial Derivation::apply(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_))
        throw DomainError("derivation applied to a polynomial from a different ring");
    Polynomial out = Polynomial::zero(ring_);
    for (int i = 0; i < ring_->arity(); ++i) {
        if (images_[i].is_zero()) continue;
        Polynomial p = f.partial_derivative(i);
        if (!p.is_zero()) out = out + p * images_[i];
    }
    return out;
}

Polynomial Derivation::iterate(const Polynomial& f, int n) const {
    Polynomial g = f;
    for (int i = 0; i < n; ++i) g = apply(g);
    return g;
}

std::optional<std::vector<std::string>> triangular_order(const Derivation& d) {
    const Ring& ring = d.ring();
    int n = ring->arity();
    std::vector<bool> placed(n, false);
    std::vector<std::string> order;
    for (int step = 0; step < n; ++step) {
        int found = -1;
        for (int v = 0; v < n && found < 0; ++v) {
            if (placed[v]) continue;
            bool ok = true;
            for (const auto& [m, c] : d.image(v).terms()) {
                for (int j = 0; j < n && ok; ++j)
                    if (m[j] > 0 && !placed[j]) ok = false;
                if (!ok) break;
            }
            if (ok) found = v;
        }
        if (found < 0) return std::nullopt;
        placed[found] = true;
        order.push_back(ring->variable(found));
    }
    return order;
}

std::string DeltaDegree::to_string() const {
    switch (status) {
        case Status::MinusInfinity: return "-infinity";
        case Status::Finite: return std::to_string(value);
        default: return "exceeded cap";
    }
}

DeltaDegree nu(const Derivation& d, const Polynomial& f, int cap) {
    if (f.is_zero()) return DeltaDegree::minus_infinity();
    Polynomial g = f;
    for (int n = 0; n <= cap; ++n) {
        Polynomial next = d.apply(g);
        if (next.is_zero()) return DeltaDegree::finite(n);
        g = next;
    }
    return DeltaDegree::exceeded();
}

namespace {

// Iterates delta on f until zero; throws when the cap is hit.
std::vector<Polynomial> nilpotent_iterates(const Derivation& d, const Polynomial& f, int cap) {
    std::vector<Polynomial> it;
    Polynomial g = f;
    while (!g.is_zero()) {
        if (static_cast<int>(it.size()) > cap)
            throw DomainError("element not verifiably nilpotent within the iteration cap");
        it.push_back(g);
        g = d.apply(g);
    }
    return it; // empty for f = 0
}

} // namespace

PhiT phi_t(const Derivation& d, const Polynomial& f, int cap) {
    Ring ext = extend_ring(d.ring(), {"t"});
    int t_index = ext->arity() - 1;
    std::vector<Polynomial> iterates = nilpotent_iterates(d, f, cap);
    Polynomial value = Polynomial::zero(ext);
    for (size_t i = 0; i < iterates.size(); ++i) {
        Rational c = make_rational(Integer(1), factorial(static_cast<unsigned>(i)));
        Monomial ti(ext->arity(), 0);
        ti[t_index] = static_cast<int>(i);
        value = value + iterates[i].rename_into(ext).scaled(c) *
                            Polynomial::monomial(ext, ti, Rational(1));
    }
    return {ext, value};
}

Polynomial phi_minus_u(const Derivation& d, const Polynomial& u, const Polynomial& f, int cap) {
    Polynomial du = d.apply(u);
    if (!(du == Polynomial::constant(d.ring(), Rational(1))))
        throw DomainError("u is not a slice: delta(u) != 1");
    std::vector<Polynomial> iterates = nilpotent_iterates(d, f, cap);
    Polynomial minus_u = -u;
    Polynomial acc = Polynomial::zero(d.ring());
    Polynomial upow = Polynomial::constant(d.ring(), Rational(1));
    for (size_t i = 0; i < iterates.size(); ++i) {
        Rational c = make_rational(Integer(1), factorial(static_cast<unsigned>(i)));
        acc = acc + iterates[i].scaled(c) * upow;
        upow = upow * minus_u;
    }
    return acc;
}

std::string LocalizedElement::to_string() const {
    if (power == 0) return numerator.to_string();
    std::string den = "(" + denominator_base.to_string() + ")";
    if (power > 1) den += "^" + std::to_string(power);
    return "(" + numerator.to_string() + ") / " + den;
}

std::vector<LocalizedElement> local_slice_kernel(const Derivation& d, const Polynomial& u_prime,
                                                 const std::vector<Polynomial>& generators,
                                                 int cap) {
    Polynomial a = d.apply(u_prime);
    if (a.is_zero())
        throw DomainError("u' is not a local slice: delta(u') = 0");
    if (!d.apply(a).is_zero())
        throw DomainError("delta(u') is not a kernel element");

    Polynomial minus_u = -u_prime;
    std::vector<LocalizedElement> out;
    for (const Polynomial& g : generators) {
        std::vector<Polynomial> iterates = nilpotent_iterates(d, g, cap);
        int n = static_cast<int>(iterates.size()); // delta^n(g) = 0
        // sum_i delta^i(g) (-u')^i a^{N-i} / i!  over the common denominator a^N
        int big = n == 0 ? 0 : n - 1;
        Polynomial num = Polynomial::zero(d.ring());
        Polynomial upow = Polynomial::constant(d.ring(), Rational(1));
        for (int i = 0; i <= big; ++i) {
            Rational c = make_rational(Integer(1), factorial(static_cast<unsigned>(i)));
            num = num + iterates[i].scaled(c) * upow * a.pow(big - i);
            upow = upow * minus_u;
        }
        int power = big;
        while (power > 0) {
            auto q = exact_divide(num, a);
            if (!q) break;
            num = *q;
            --power;
        }
        if (num.is_zero()) power = 0;
        out.push_back({num, a, power});
    }
    return out;
}

Derivation rename_derivation(const Derivation& d, const std::vector<std::string>& new_names) {
    if (static_cast<int>(new_names.size()) != d.ring()->arity())
        throw DomainError("rename needs one name per variable");
    Ring target = make_ring(new_names);
    std::vector<Polynomial> images;
    for (const Polynomial& g : d.images()) {
        // positional renaming: variable i keeps its images with new names
        Polynomial img = Polynomial::zero(target);
        for (const auto& [m, c] : g.terms()) img.add_term(m, c);
        images.push_back(std::move(img));
    }
    return Derivation(target, std::move(images));
}

} // namespace lnd
