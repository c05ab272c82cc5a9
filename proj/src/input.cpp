#include "lnd/input.hpp"

#include <fstream>
#include <sstream>

#include "lnd/parser.hpp"

namespace lnd {

namespace {

// Split a polynomial over ring+basis into basis components; requires every
// monomial to have total degree exactly one in the basis variables.
ModuleElement split_linear(const Polynomial& f, const Ring& base, const Ring& ext, int rank) {
    int n = base->arity();
    ModuleElement out = zero_element(base, rank);
    for (const auto& [m, c] : f.terms()) {
        int basis_index = -1;
        for (int j = 0; j < rank; ++j) {
            if (m[n + j] == 0) continue;
            if (m[n + j] > 1 || basis_index >= 0)
                throw ParseError("module expression must be linear in the basis elements");
            basis_index = j;
        }
        if (basis_index < 0)
            throw ParseError("module expression has a term with no basis element");
        Monomial ring_mono(m.begin(), m.begin() + n);
        out[basis_index].add_term(ring_mono, c);
    }
    (void)ext;
    return out;
}

Polynomial parse_in(TokenStream& ts, const Ring& ring) { return parse_poly_expr(ts, ring); }

} // namespace

ModuleElement parse_module_element(const std::string& text, const Ring& base,
                                   const std::vector<std::string>& basis) {
    Ring ext = extend_ring(base, basis);
    Polynomial f = parse_polynomial(text, ext);
    return split_linear(f, base, ext, static_cast<int>(basis.size()));
}

std::vector<ModuleElement> parse_module_element_list(const std::string& text, const Ring& base,
                                                     const std::vector<std::string>& basis) {
    Ring ext = extend_ring(base, basis);
    std::vector<ModuleElement> out;
    for (const auto& f : parse_polynomial_list(text, ext))
        out.push_back(split_linear(f, base, ext, static_cast<int>(basis.size())));
    return out;
}

InputDefinitions parse_definitions(const std::string& text) {
    InputDefinitions defs;
    TokenStream ts(tokenize(text));

    auto get_ring = [&](const std::string& name) -> const Ring& {
        auto it = defs.rings.find(name);
        if (it == defs.rings.end()) throw ParseError("unknown ring: " + name);
        return it->second;
    };
    auto get_derivation = [&](const std::string& name) -> const Derivation& {
        auto it = defs.derivations.find(name);
        if (it == defs.derivations.end()) throw ParseError("unknown derivation: " + name);
        return it->second;
    };

    while (!ts.at_end()) {
        std::string keyword = ts.expect_ident();
        if (keyword == "ring") {
            std::string name = ts.expect_ident();
            ts.expect_symbol("=");
            std::string field = ts.expect_ident();
            if (field != "Q") throw ParseError("only the coefficient field Q is supported");
            ts.expect_symbol("[");
            std::vector<std::string> vars;
            vars.push_back(ts.expect_ident());
            while (ts.accept_symbol(",")) vars.push_back(ts.expect_ident());
            ts.expect_symbol("]");
            if (defs.rings.count(name)) throw ParseError("duplicate ring name: " + name);
            defs.rings.emplace(name, make_ring(vars));
            defs.ring_order.push_back(name);
        } else if (keyword == "derivation") {
            std::string name = ts.expect_ident();
            if (ts.expect_ident() != "on") ts.fail("expected 'on'");
            Ring ring = get_ring(ts.expect_ident());
            ts.expect_symbol("{");
            std::map<std::string, Polynomial> images;
            while (!ts.accept_symbol("}")) {
                std::string var = ts.expect_ident();
                if (!ring->has_variable(var))
                    throw ParseError("derivation image for unknown variable: " + var);
                ts.expect_symbol("->");
                Polynomial img = parse_in(ts, ring);
                ts.expect_symbol(";");
                if (!images.emplace(var, img).second)
                    throw ParseError("duplicate image for variable: " + var);
            }
            std::vector<Polynomial> ordered;
            for (const auto& var : ring->variables()) {
                auto it = images.find(var);
                if (it == images.end())
                    throw ParseError("derivation image missing for variable: " + var);
                ordered.push_back(it->second);
            }
            if (defs.derivations.count(name))
                throw ParseError("duplicate derivation name: " + name);
            defs.derivations.emplace(name, Derivation(ring, ordered));
            defs.derivation_order.push_back(name);
        } else if (keyword == "module") {
            std::string name = ts.expect_ident();
            if (ts.expect_ident() != "on") ts.fail("expected 'on'");
            Derivation base = get_derivation(ts.expect_ident());
            ts.expect_symbol("{");
            if (ts.expect_ident() != "basis") ts.fail("expected 'basis'");
            std::vector<std::string> basis;
            basis.push_back(ts.expect_ident());
            while (ts.accept_symbol(",")) basis.push_back(ts.expect_ident());
            ts.expect_symbol(";");
            Ring ext = extend_ring(base.ring(), basis);
            int rank = static_cast<int>(basis.size());

            std::map<std::string, ModuleElement> images;
            std::vector<ModuleElement> relations;
            while (!ts.accept_symbol("}")) {
                std::string head = ts.expect_ident();
                if (head == "d") {
                    std::string e = ts.expect_ident();
                    ts.expect_symbol("->");
                    Polynomial f = parse_in(ts, ext);
                    ts.expect_symbol(";");
                    ModuleElement img = split_linear(f, base.ring(), ext, rank);
                    if (!images.emplace(e, img).second)
                        throw ParseError("duplicate module image for: " + e);
                } else if (head == "relations") {
                    ts.expect_symbol(":");
                    relations.push_back(split_linear(parse_in(ts, ext), base.ring(), ext, rank));
                    while (ts.accept_symbol(","))
                        relations.push_back(
                            split_linear(parse_in(ts, ext), base.ring(), ext, rank));
                    ts.expect_symbol(";");
                } else {
                    ts.fail("expected 'd <basis> -> ...' or 'relations:'");
                }
            }

            std::vector<std::vector<Polynomial>> conn(
                rank, std::vector<Polynomial>(rank, Polynomial::zero(base.ring())));
            for (int j = 0; j < rank; ++j) {
                auto it = images.find(basis[j]);
                if (it == images.end())
                    throw ParseError("module image missing for basis element: " + basis[j]);
                for (int i = 0; i < rank; ++i) conn[i][j] = it->second[i];
            }
            for (const auto& [e, img] : images) {
                bool known = false;
                for (const auto& b : basis) known |= (b == e);
                if (!known) throw ParseError("module image for unknown basis element: " + e);
            }
            if (defs.modules.count(name)) throw ParseError("duplicate module name: " + name);
            defs.modules.emplace(name, DeltaModule(base, basis, conn, relations));
            defs.module_order.push_back(name);
        } else {
            ts.fail("expected 'ring', 'derivation', or 'module'");
        }
    }
    return defs;
}

InputDefinitions parse_definitions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_definitions(buf.str());
}

} // namespace lnd
