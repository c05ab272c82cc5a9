#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lnd/catalog.hpp"
#include "lnd/parser.hpp"
#include "support/oracles.hpp"

using namespace lnd;

namespace {

constexpr unsigned kSeed = 0x5eed0003;

Derivation xy_shift() { // delta(x)=0, delta(y)=x
    Ring r = make_ring({"x", "y"});
    return Derivation(r, {Polynomial::zero(r), Polynomial::variable(r, 0)});
}

} // namespace

TEST_CASE("apply: Leibniz extension of variable images") {
    Derivation d = xy_shift();
    const Ring& r = d.ring();
    CHECK(d.apply(parse_polynomial("y^2", r)) == parse_polynomial("2*x*y", r));
    CHECK(d.apply(Polynomial::constant(r, Rational(5))).is_zero());

    CatalogEntry roberts = catalog_get("roberts", {{"n", 3}, {"t", 2}});
    const Derivation& rd = roberts.derivation();
    CHECK(rd.apply(Polynomial::variable(rd.ring(), "y4")) ==
          parse_polynomial("x1^2*x2^2*x3^2", rd.ring()));

    Ring other = make_ring({"a", "b"});
    CHECK_THROWS_AS(d.apply(Polynomial::variable(other, 0)), DomainError);
}

TEST_CASE("iterate") {
    Derivation d = xy_shift();
    const Ring& r = d.ring();
    Polynomial y = Polynomial::variable(r, 1);
    CHECK(d.iterate(y, 2).is_zero());
    CHECK(d.iterate(y * y, 2) == parse_polynomial("2*x^2", r));
    Polynomial f = parse_polynomial("x*y^2 - 3*y", r);
    CHECK(d.iterate(f, 0) == f);
}

TEST_CASE("triangular order witnesses") {
    CatalogEntry roberts = catalog_get("roberts", {{"n", 3}, {"t", 2}});
    auto order = triangular_order(roberts.derivation());
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3", "y4"});

    CatalogEntry df5 = catalog_get("df5", {});
    auto df5_order = triangular_order(df5.derivation());
    REQUIRE(df5_order.has_value());
    CHECK(*df5_order == std::vector<std::string>{"x", "s", "t", "u", "v"});

    // delta(x)=y, delta(y)=x has no triangular order (and is not LND)
    Ring r = make_ring({"x", "y"});
    Derivation swap(r, {Polynomial::variable(r, 1), Polynomial::variable(r, 0)});
    CHECK_FALSE(triangular_order(swap).has_value());
}

TEST_CASE("nu") {
    Derivation d = xy_shift();
    const Ring& r = d.ring();
    Polynomial y = Polynomial::variable(r, 1);

    DeltaDegree n1 = nu(d, y);
    CHECK(n1.is_finite());
    CHECK(n1.value == 1);

    DeltaDegree n2 = nu(d, y * y);
    CHECK(n2.value == 2); // nu(y^2) = nu(y) + nu(y)

    CHECK(nu(d, Polynomial::zero(r)).status == DeltaDegree::Status::MinusInfinity);

    Derivation swap(r, {Polynomial::variable(r, 1), Polynomial::variable(r, 0)});
    CHECK(nu(swap, y, 32).status == DeltaDegree::Status::ExceededCap);
}

TEST_CASE("phi_t") {
    Derivation d = xy_shift();
    const Ring& r = d.ring();
    Polynomial y = Polynomial::variable(r, 1);

    PhiT p = phi_t(d, y);
    CHECK(p.value == parse_polynomial("y + x*t", p.extended_ring));

    Polynomial x = Polynomial::variable(r, 0);
    CHECK(phi_t(d, x).value == parse_polynomial("x", p.extended_ring));

    PhiT p2 = phi_t(d, y * y);
    Polynomial expected = parse_polynomial("(y + x*t)^2", p2.extended_ring);
    CHECK(p2.value == expected);

    // fresh variable "t" must not collide
    CatalogEntry df5 = catalog_get("df5", {});
    CHECK_THROWS_AS(phi_t(df5.derivation(), Polynomial::variable(df5.derivation().ring(), "v")),
                    DomainError);
}

TEST_CASE("phi_t is multiplicative") {
    std::mt19937_64 rng(kSeed);
    Derivation d = xy_shift();
    for (int i = 0; i < 100; ++i) {
        Polynomial f = oracle::random_polynomial(rng, d.ring());
        Polynomial g = oracle::random_polynomial(rng, d.ring());
        PhiT pf = phi_t(d, f), pg = phi_t(d, g), pfg = phi_t(d, f * g);
        CHECK(pfg.value == pf.value * pg.value);
    }
}

TEST_CASE("phi_minus_u") {
    // delta(x)=0, delta(y)=1: u = y is a slice
    Ring r = make_ring({"x", "y"});
    Derivation d(r, {Polynomial::zero(r), Polynomial::constant(r, Rational(1))});
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);

    CHECK(phi_minus_u(d, y, y).is_zero());
    CHECK(phi_minus_u(d, y, x) == x);
    CHECK(phi_minus_u(d, y, x * y * y).is_zero());

    // all outputs are kernel elements
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = oracle::random_polynomial(rng, r);
        CHECK(d.apply(phi_minus_u(d, y, f)).is_zero());
    }

    CHECK_THROWS_AS(phi_minus_u(d, x, y), DomainError); // delta(x) != 1
}

TEST_CASE("local_slice_kernel: Lemma 4.4 toy") {
    CatalogEntry lem44 = catalog_get("lem44", {{"n", 1}}); // delta = (0, x, y)
    const Derivation& d = lem44.derivation();
    const Ring& r = d.ring();
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
               z = Polynomial::variable(r, 2);

    auto out = local_slice_kernel(d, y, {z, x, y});
    REQUIRE(out.size() == 3);

    // phi_{-y/x}(z) = (x*z - 1/2*y^2) / x
    CHECK(out[0].numerator == parse_polynomial("x*z - 1/2*y^2", r));
    CHECK(out[0].denominator_base == x);
    CHECK(out[0].power == 1);
    // a rational multiple of 2xz - y^2 after clearing denominators
    CHECK(out[0].numerator.scaled(Rational(2)) == parse_polynomial("2*x*z - y^2", r));
    // y^2 coefficient of x*phi = -c/(n+1) = -1/2
    CHECK(out[0].numerator.coefficient(Monomial{0, 2, 0}) == make_rational(-1, 2));

    // kernel generator x passes through with power 0
    CHECK(out[1].numerator == x);
    CHECK(out[1].power == 0);

    // phi_{-y/x}(y) = 0
    CHECK(out[2].numerator.is_zero());
    CHECK(out[2].power == 0);

    // every numerator is annihilated by delta
    for (const auto& le : out) CHECK(d.apply(le.numerator).is_zero());

    // error paths: a = 0 and a not in the kernel
    CHECK_THROWS_AS(local_slice_kernel(d, x, {z}), DomainError);
    CHECK_THROWS_AS(local_slice_kernel(d, z, {z}), DomainError);
}

TEST_CASE("Leibniz rule for catalog derivations") {
    std::mt19937_64 rng(kSeed + 2);
    std::vector<Derivation> ds;
    ds.push_back(catalog_get("ex33", {}).derivation());
    ds.push_back(catalog_get("df5", {}).derivation());
    ds.push_back(catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation());
    for (const Derivation& d : ds) {
        for (int i = 0; i < 100; ++i) {
            Polynomial f = oracle::random_polynomial(rng, d.ring(), 3, 2);
            Polynomial g = oracle::random_polynomial(rng, d.ring(), 3, 2);
            CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
        }
    }
}

TEST_CASE("nu additivity and subadditivity") {
    std::mt19937_64 rng(kSeed + 3);
    Derivation d = catalog_get("df5", {}).derivation();
    int additive_checked = 0;
    for (int i = 0; i < 150; ++i) {
        Polynomial f = oracle::random_polynomial(rng, d.ring(), 3, 2);
        Polynomial g = oracle::random_polynomial(rng, d.ring(), 3, 2);
        DeltaDegree nf = nu(d, f), ng = nu(d, g);
        if (nf.is_finite() && ng.is_finite()) {
            DeltaDegree nfg = nu(d, f * g);
            REQUIRE(nfg.is_finite());
            CHECK(nfg.value == nf.value + ng.value);
            ++additive_checked;
        }
        Polynomial s = f + g;
        DeltaDegree ns = nu(d, s);
        if (!s.is_zero()) {
            int bound = std::max(nf.is_finite() ? nf.value : -1, ng.is_finite() ? ng.value : -1);
            REQUIRE(ns.is_finite());
            CHECK(ns.value <= bound);
        }
    }
    CHECK(additive_checked >= 100);
}

TEST_CASE("structural triangularity implies nu terminates for variables") {
    for (const char* id : {"ex33", "df5", "freudenburg6"}) {
        Derivation d = catalog_get(id, {}).derivation();
        REQUIRE(triangular_order(d).has_value());
        for (int i = 0; i < d.ring()->arity(); ++i)
            CHECK(nu(d, Polynomial::variable(d.ring(), i)).is_finite());
    }
}
