#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/polynomial.hpp"

namespace lnd {

// Element of a free module B^rank: one polynomial per basis component.
using ModuleElement = std::vector<Polynomial>;

ModuleElement zero_element(const Ring& ring, int rank);
ModuleElement me_add(const ModuleElement& a, const ModuleElement& b);
ModuleElement me_sub(const ModuleElement& a, const ModuleElement& b);
ModuleElement me_scale(const ModuleElement& a, const Polynomial& f);
ModuleElement me_scale(const ModuleElement& a, const Rational& c);
bool me_is_zero(const ModuleElement& a);
bool me_equal(const ModuleElement& a, const ModuleElement& b);
std::string me_to_string(const ModuleElement& a, const std::vector<std::string>& basis_names);

// Submodule Groebner basis under position-over-term order (positions compared
// by basis index, lower index first; terms by `order`). Ideals are the rank-1
// case. The stored basis is reduced: monic, auto-reduced, sorted by leading
// term, hence canonical for the generated submodule.
struct ModuleGroebnerBasis {
    int rank = 1;
    TermOrder order = TermOrder::Grevlex;
    std::vector<ModuleElement> generators;
};

ModuleGroebnerBasis buchberger_module(const std::vector<ModuleElement>& gens, TermOrder order,
                                      int rank);
ModuleElement normal_form(const ModuleElement& f, const ModuleGroebnerBasis& gb);
bool member(const ModuleElement& f, const ModuleGroebnerBasis& gb);

struct GroebnerBasis {
    TermOrder order = TermOrder::Grevlex;
    std::vector<Polynomial> generators;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool member(const Polynomial& f, const GroebnerBasis& gb);

// delta-ideal test: an ideal is delta-stable iff the image of every generator
// is a member again. On failure carries the offending generator and image.
struct DeltaIdealCheck {
    bool holds;
    std::optional<std::pair<Polynomial, Polynomial>> witness;
};

DeltaIdealCheck is_delta_ideal(const Derivation& d, const std::vector<Polynomial>& gens);

class DeltaModule;
struct DeltaSubmoduleCheck {
    bool holds;
    std::optional<std::pair<ModuleElement, ModuleElement>> witness;
};

DeltaSubmoduleCheck is_delta_submodule(const DeltaModule& m, const std::vector<ModuleElement>& gens);

} // namespace lnd
