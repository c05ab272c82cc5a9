#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lnd/catalog.hpp"
#include "lnd/parser.hpp"
#include "support/oracles.hpp"

using namespace lnd;

namespace {
constexpr unsigned kSeed = 0x5eed0004;
}

TEST_CASE("monomial ideal is its own basis") {
    Ring r = make_ring({"x", "y"});
    auto gens = parse_polynomial_list("x^2, x*y", r);
    GroebnerBasis gb = buchberger(gens, TermOrder::Lex);
    REQUIRE(gb.generators.size() == 2);
    CHECK(member(parse_polynomial("x^2*y", r), gb));
    CHECK_FALSE(member(parse_polynomial("x", r), gb));
    CHECK(normal_form(parse_polynomial("x", r), gb) == parse_polynomial("x", r));

    GroebnerBasis principal = buchberger({parse_polynomial("x", r)}, TermOrder::Grevlex);
    REQUIRE(principal.generators.size() == 1);
    CHECK(principal.generators[0] == parse_polynomial("x", r));

    CHECK_THROWS_AS(buchberger({}, TermOrder::Lex), DomainError);
}

TEST_CASE("Example 3.3: x not in (x^2, y)") {
    Ring r = make_ring({"x", "y"});
    GroebnerBasis gb = buchberger(parse_polynomial_list("x^2, y", r), TermOrder::Grevlex);
    CHECK(normal_form(parse_polynomial("x", r), gb) == parse_polynomial("x", r));
    CHECK_FALSE(member(parse_polynomial("x", r), gb));
}

TEST_CASE("Buchberger computes a real basis: (x^2-y, x^3-z)") {
    Ring r = make_ring({"x", "y", "z"});
    auto gens = parse_polynomial_list("x^2 - y, x^3 - z", r);
    GroebnerBasis gb = buchberger(gens, TermOrder::Lex);
    // x*y - z is in the ideal; reduction must see it
    CHECK(member(parse_polynomial("x*y - z", r), gb));
    CHECK(member(parse_polynomial("y^3 - z^2", r), gb));
    CHECK_FALSE(member(parse_polynomial("x", r), gb));
}

TEST_CASE("module GB for the Lemma 4.3 relations") {
    CatalogEntry lem43 = catalog_get("lem43", {{"q", 2}});
    const DeltaModule& m = lem43.module();
    const ModuleGroebnerBasis* gb = m.relations_gb();
    REQUIRE(gb != nullptr);
    // derived by hand: {y e2, y e1 + x^2 e2, x^2 e1, x^4 e2}
    CHECK(gb->generators.size() == 4);
    const Ring& r = m.ring();
    ModuleElement x4e2{Polynomial::zero(r), parse_polynomial("x^4", r)};
    CHECK(member(x4e2, *gb));
    ModuleElement e1{Polynomial::constant(r, Rational(1)), Polynomial::zero(r)};
    CHECK_FALSE(member(e1, *gb));
    ModuleElement x2e1{parse_polynomial("x^2", r), Polynomial::zero(r)};
    CHECK(member(x2e1, *gb));
}

TEST_CASE("normal form is invariant under generator permutations") {
    std::mt19937_64 rng(kSeed);
    Ring r = make_ring({"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            Polynomial g = oracle::random_polynomial(rng, r, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb1 = buchberger(gens, TermOrder::Grevlex);
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        GroebnerBasis gb2 = buchberger(shuffled, TermOrder::Grevlex);
        REQUIRE(gb1.generators.size() == gb2.generators.size());
        for (size_t i = 0; i < gb1.generators.size(); ++i)
            CHECK(gb1.generators[i] == gb2.generators[i]);
        for (int i = 0; i < 10; ++i) {
            Polynomial f = oracle::random_polynomial(rng, r, 4, 3);
            CHECK(normal_form(f, gb1) == normal_form(f, gb2));
        }
    }
}

TEST_CASE("membership is consistent with ideal arithmetic") {
    std::mt19937_64 rng(kSeed + 1);
    Ring r = make_ring({"x", "y"});
    auto gens = parse_polynomial_list("x^2 - y, y^2", r);
    GroebnerBasis gb = buchberger(gens, TermOrder::Grevlex);
    for (int i = 0; i < 100; ++i) {
        Polynomial h = oracle::random_polynomial(rng, r, 3, 2);
        Polynomial f = gens[0] * oracle::random_polynomial(rng, r, 2, 2);
        Polynomial g = gens[1];
        CHECK(member(f, gb));
        CHECK(member(f + h * g, gb));
    }
}

TEST_CASE("monomial ideal membership agrees with divisibility") {
    std::mt19937_64 rng(kSeed + 2);
    Ring r = make_ring({"x", "y", "z"});
    std::uniform_int_distribution<int> exp(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Monomial> lead;
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            Monomial m{exp(rng), exp(rng), exp(rng)};
            lead.push_back(m);
            gens.push_back(Polynomial::monomial(r, m, Rational(1)));
        }
        GroebnerBasis gb = buchberger(gens, TermOrder::Grevlex);
        Monomial probe{exp(rng), exp(rng), exp(rng)};
        bool divisible = false;
        for (const auto& m : lead) divisible |= divides(m, probe);
        CHECK(member(Polynomial::monomial(r, probe, Rational(1)), gb) == divisible);
    }
}

TEST_CASE("Example 3.3 delta-ideal verdicts") {
    Derivation d = catalog_get("ex33", {}).derivation();
    const Ring& r = d.ring();

    auto check1 = is_delta_ideal(d, parse_polynomial_list("x^2, x*y", r));
    CHECK(check1.holds);

    auto check2 = is_delta_ideal(d, {parse_polynomial("x", r)});
    CHECK(check2.holds);

    auto check3 = is_delta_ideal(d, parse_polynomial_list("x^2, y", r));
    CHECK_FALSE(check3.holds);
    REQUIRE(check3.witness.has_value());
    CHECK(check3.witness->first == parse_polynomial("y", r));
    CHECK(check3.witness->second == parse_polynomial("x", r));
}

TEST_CASE("delta-submodule checks on the Theorem 5.2 module") {
    CatalogEntry entry = catalog_get("thm52", {{"n", 4}});
    const DeltaModule& m = entry.module();
    const Ring& r = m.ring();
    ModuleElement e1{Polynomial::constant(r, Rational(1)), Polynomial::zero(r)};
    ModuleElement e2{Polynomial::zero(r), Polynomial::constant(r, Rational(1))};

    CHECK(is_delta_submodule(m, {e1}).holds);

    auto bad = is_delta_submodule(m, {e2});
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(me_equal(bad.witness->first, e2));
    CHECK(bad.witness->second[0] == parse_polynomial("x1*x2*x3*x4", r));

    CHECK(is_delta_submodule(m, {e1, e2}).holds);
}
