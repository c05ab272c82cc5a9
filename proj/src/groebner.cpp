#include "lnd/groebner.hpp"

#include <algorithm>

namespace lnd {

ModuleElement zero_element(const Ring& ring, int rank) {
    return ModuleElement(rank, Polynomial::zero(ring));
}

ModuleElement me_add(const ModuleElement& a, const ModuleElement& b) {
    ModuleElement r;
    r.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

ModuleElement me_sub(const ModuleElement& a, const ModuleElement& b) {
    ModuleElement r;
    r.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

ModuleElement me_scale(const ModuleElement& a, const Polynomial& f) {
    ModuleElement r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(c * f);
    return r;
}

ModuleElement me_scale(const ModuleElement& a, const Rational& c) {
    ModuleElement r;
    r.reserve(a.size());
    for (const auto& p : a) r.push_back(p.scaled(c));
    return r;
}

bool me_is_zero(const ModuleElement& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool me_equal(const ModuleElement& a, const ModuleElement& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string me_to_string(const ModuleElement& a, const std::vector<std::string>& basis_names) {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (a[i].num_terms() == 1 && a[i].leading_term()->second > 0) {
            std::string s = a[i].to_string();
            out += (s == "1") ? basis_names[i] : s + "*" + basis_names[i];
        } else {
            out += "(" + a[i].to_string() + ")*" + basis_names[i];
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

struct ModLead {
    int pos;
    Monomial mono;
    Rational coeff;
};

// Position-over-term: lower basis index first, then the monomial order.
std::optional<ModLead> mod_lead(const ModuleElement& f, TermOrder order) {
    for (size_t p = 0; p < f.size(); ++p) {
        if (f[p].is_zero()) continue;
        auto lt = f[p].leading_term(order).value();
        return ModLead{static_cast<int>(p), lt.first, lt.second};
    }
    return std::nullopt;
}

ModuleElement mono_times(const ModuleElement& f, const Monomial& m, const Rational& c) {
    Polynomial factor = Polynomial::monomial(f[0].ring(), m, c);
    return me_scale(f, factor);
}

// Full reduction: every term of the result is reducible by no basis lead.
ModuleElement reduce_full(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                          const std::vector<ModLead>& leads, TermOrder order) {
    ModuleElement rem = zero_element(f[0].ring(), static_cast<int>(f.size()));
    ModuleElement work = f;
    while (true) {
        auto lt = mod_lead(work, order);
        if (!lt) break;
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].pos != lt->pos || !divides(leads[i].mono, lt->mono)) continue;
            Monomial q = mono_div(lt->mono, leads[i].mono);
            work = me_sub(work, mono_times(basis[i], q, lt->coeff / leads[i].coeff));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[lt->pos].add_term(lt->mono, lt->coeff);
            work[lt->pos].add_term(lt->mono, -lt->coeff);
        }
    }
    return rem;
}

struct Pair {
    int i, j;
    int lcm_degree;
};

} // namespace

ModuleGroebnerBasis buchberger_module(const std::vector<ModuleElement>& gens, TermOrder order,
                                      int rank) {
    if (gens.empty())
        throw DomainError("buchberger: empty generator list");
    Ring ring;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != rank)
            throw DomainError("buchberger: generator rank mismatch");
        for (const auto& c : g) {
            if (!ring) ring = c.ring();
            if (!same_ring(ring, c.ring()))
                throw DomainError("buchberger: generators from different rings");
        }
    }

    std::vector<ModuleElement> basis;
    std::vector<ModLead> leads;
    auto push = [&](const ModuleElement& f) {
        auto lt = mod_lead(f, order);
        basis.push_back(me_scale(f, Rational(1) / lt->coeff));
        lt->coeff = 1;
        leads.push_back(*lt);
    };
    for (const auto& g : gens)
        if (!me_is_zero(g)) push(g);

    if (!basis.empty()) {
        // Normal strategy: pairs by lcm degree, ties by index.
        std::vector<Pair> pairs;
        auto add_pairs = [&](int j) {
            for (int i = 0; i < j; ++i) {
                if (leads[i].pos != leads[j].pos) continue;
                pairs.push_back({i, j, total_degree(mono_lcm(leads[i].mono, leads[j].mono))});
            }
        };
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs(j);

        while (!pairs.empty()) {
            auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
                return std::tie(a.lcm_degree, a.i, a.j) < std::tie(b.lcm_degree, b.i, b.j);
            });
            Pair p = *best;
            pairs.erase(best);
            Monomial l = mono_lcm(leads[p.i].mono, leads[p.j].mono);
            ModuleElement s = me_sub(mono_times(basis[p.i], mono_div(l, leads[p.i].mono), Rational(1)),
                                     mono_times(basis[p.j], mono_div(l, leads[p.j].mono), Rational(1)));
            ModuleElement r = reduce_full(s, basis, leads, order);
            if (!me_is_zero(r)) {
                push(r);
                add_pairs(static_cast<int>(basis.size()) - 1);
            }
        }
    }

    // Auto-reduce to the canonical reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<ModuleElement> others;
            std::vector<ModLead> other_leads;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (j == i) continue;
                others.push_back(basis[j]);
                other_leads.push_back(leads[j]);
            }
            if (others.empty()) break;
            ModuleElement r = reduce_full(basis[i], others, other_leads, order);
            if (!me_equal(r, basis[i])) {
                changed = true;
                if (me_is_zero(r)) {
                    basis.erase(basis.begin() + i);
                    leads.erase(leads.begin() + i);
                } else {
                    auto lt = mod_lead(r, order);
                    basis[i] = me_scale(r, Rational(1) / lt->coeff);
                    lt->coeff = 1;
                    leads[i] = *lt;
                }
                break;
            }
        }
    }

    std::vector<int> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (leads[a].pos != leads[b].pos) return leads[a].pos < leads[b].pos;
        return mono_greater(leads[a].mono, leads[b].mono, order);
    });
    ModuleGroebnerBasis out;
    out.rank = rank;
    out.order = order;
    for (int i : idx) out.generators.push_back(basis[i]);
    return out;
}

ModuleElement normal_form(const ModuleElement& f, const ModuleGroebnerBasis& gb) {
    std::vector<ModLead> leads;
    for (const auto& g : gb.generators) leads.push_back(mod_lead(g, gb.order).value());
    return reduce_full(f, gb.generators, leads, gb.order);
}

bool member(const ModuleElement& f, const ModuleGroebnerBasis& gb) {
    return me_is_zero(normal_form(f, gb));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order) {
    std::vector<ModuleElement> wrapped;
    for (const auto& g : gens) wrapped.push_back({g});
    ModuleGroebnerBasis mg = buchberger_module(wrapped, order, 1);
    GroebnerBasis out;
    out.order = order;
    for (const auto& g : mg.generators) out.generators.push_back(g[0]);
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    ModuleGroebnerBasis mg;
    mg.rank = 1;
    mg.order = gb.order;
    for (const auto& g : gb.generators) mg.generators.push_back({g});
    return normal_form(ModuleElement{f}, mg)[0];
}

bool member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

DeltaIdealCheck is_delta_ideal(const Derivation& d, const std::vector<Polynomial>& gens) {
    GroebnerBasis gb = buchberger(gens, TermOrder::Grevlex);
    for (const auto& g : gens) {
        Polynomial img = d.apply(g);
        if (!member(img, gb)) return {false, std::make_pair(g, img)};
    }
    return {true, std::nullopt};
}

} // namespace lnd
