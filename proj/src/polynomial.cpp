#include "lnd/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lnd {

RingDescriptor::RingDescriptor(std::vector<std::string> variables) : vars_(std::move(variables)) {
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        if (vars_[i].empty())
            throw DomainError("empty variable name");
        if (!index_.emplace(vars_[i], i).second)
            throw DomainError("duplicate variable name: " + vars_[i]);
    }
}

int RingDescriptor::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw DomainError("unknown variable: " + name);
    return it->second;
}

Ring make_ring(std::vector<std::string> variables) {
    return std::make_shared<RingDescriptor>(std::move(variables));
}

Ring extend_ring(const Ring& base, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = base->variables();
    for (const auto& name : extra) {
        if (base->has_variable(name))
            throw DomainError("variable name collision when extending ring: " + name);
        vars.push_back(name);
    }
    return make_ring(std::move(vars));
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool mono_greater(const Monomial& a, const Monomial& b, TermOrder order) {
    return order == TermOrder::Grevlex ? grevlex_greater(a, b) : lex_greater(a, b);
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
    Polynomial f(ring);
    if (c != 0) f.terms_.emplace(Monomial(ring->arity(), 0), c);
    return f;
}

Polynomial Polynomial::variable(const Ring& ring, int index) {
    if (index < 0 || index >= ring->arity())
        throw DomainError("variable index out of range");
    Monomial m(ring->arity(), 0);
    m[index] = 1;
    return monomial(ring, m, Rational(1));
}

Polynomial Polynomial::variable(const Ring& ring, const std::string& name) {
    return variable(ring, ring->index(name));
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != ring->arity())
        throw DomainError("monomial arity mismatch");
    for (int e : m)
        if (e < 0) throw DomainError("negative exponent in monomial");
    Polynomial f(ring);
    if (c != 0) f.terms_.emplace(m, c);
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first); // grevlex leader has max degree
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(*this, g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    require_same_ring(*this, g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(*this, g);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw DomainError("negative exponent in polynomial power");
    Polynomial r = constant(ring_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    return same_ring(ring_, g.ring_) && terms_ == g.terms_;
}

Polynomial Polynomial::partial_derivative(int var) const {
    if (var < 0 || var >= ring_->arity())
        throw DomainError("unknown variable index in partial derivative");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

Polynomial Polynomial::partial_derivative(const std::string& var) const {
    return partial_derivative(ring_->index(var));
}

std::optional<std::pair<Monomial, Rational>> Polynomial::leading_term(TermOrder order) const {
    if (terms_.empty()) return std::nullopt;
    if (order == TermOrder::Grevlex) return *terms_.begin();
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (mono_greater(it->first, best->first, order)) best = it;
    return *best;
}

Polynomial Polynomial::rename_into(const Ring& target) const {
    std::vector<int> map(ring_->arity());
    for (int i = 0; i < ring_->arity(); ++i)
        map[i] = target->index(ring_->variable(i));
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target->arity(), 0);
        for (int i = 0; i < ring_->arity(); ++i) t[map[i]] = m[i];
        r.terms_.emplace(std::move(t), c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->variable(static_cast<int>(i));
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out << a.get_str();
        } else if (a == 1) {
            out << mono;
        } else {
            out << a.get_str() << "*" << mono;
        }
    }
    return out.str();
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring()))
        throw DomainError("operands live in different rings");
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    if (g.is_zero()) return std::nullopt;
    Polynomial q = Polynomial::zero(f.ring());
    Polynomial r = f;
    auto gl = g.leading_term().value();
    while (!r.is_zero()) {
        auto rl = r.leading_term().value();
        if (!divides(gl.first, rl.first)) return std::nullopt;
        Monomial m = mono_div(rl.first, gl.first);
        Rational c = rl.second / gl.second;
        Polynomial t = Polynomial::monomial(f.ring(), m, c);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

} // namespace lnd
