#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lnd/catalog.hpp"
#include "lnd/kernel.hpp"
#include "lnd/matrix.hpp"
#include "lnd/parser.hpp"
#include "support/oracles.hpp"

using namespace lnd;

namespace {

constexpr unsigned kSeed = 0x5eed0005;

Derivation xy_shift() {
    Ring r = make_ring({"x", "y"});
    return Derivation(r, {Polynomial::zero(r), Polynomial::variable(r, 0)});
}

// Is `row` in the rational row span of `rows`?
bool in_row_span(const std::vector<std::vector<long long>>& rows, const std::vector<long long>& row) {
    int n = static_cast<int>(row.size());
    RationalMatrix m(static_cast<int>(rows.size()) + 1, n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = to_rational(rows[i][j]);
    RationalMatrix m2 = m;
    for (int j = 0; j < n; ++j) m2.at(static_cast<int>(rows.size()), j) = to_rational(row[j]);
    return rref(m).rank() == rref(m2).rank();
}

} // namespace

TEST_CASE("infer_weights: simple shift") {
    Derivation d = xy_shift();
    WeightSystem ws = infer_weights(d);
    REQUIRE(ws.num_rows() == 1);
    CHECK(ws.rows[0] == std::vector<long long>{1, 1});
    CHECK(ws.shift[0] == 0);
    CHECK(ws.positive_row == 0);
}

TEST_CASE("infer_weights: df5 is the Z^1 grading x:1 s:3 t:3 u:3 v:2") {
    Derivation d = catalog_get("df5", {}).derivation();
    WeightSystem ws = infer_weights(d);
    REQUIRE(ws.num_rows() == 1);
    CHECK(ws.rows[0] == std::vector<long long>{1, 3, 3, 3, 2});
    CHECK(ws.shift[0] == 0);
}

TEST_CASE("infer_weights: roberts carries the Z^3 multigrading") {
    Derivation d = catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation();
    WeightSystem ws = infer_weights(d);
    REQUIRE(ws.num_rows() == 4); // rank-3 lattice plus the appended positive sum row
    for (long long s : ws.shift) CHECK(s == 0);

    // the spec presentation deg x_i = e_i, deg y_i = (t+1) e_i, deg y4 = (t,t,t)
    std::vector<std::vector<long long>> expected = {
        {1, 0, 0, 3, 0, 0, 2},
        {0, 1, 0, 0, 3, 0, 2},
        {0, 0, 1, 0, 0, 3, 2},
    };
    std::vector<std::vector<long long>> basis(ws.rows.begin(), ws.rows.begin() + 3);
    for (const auto& row : expected) CHECK(in_row_span(basis, row));
    for (const auto& row : basis) CHECK(in_row_span(expected, row));

    // positive row = sum of the basis rows
    CHECK(ws.positive_row == 3);
    std::vector<long long> sum(7, 0);
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 7; ++j) sum[j] += ws.rows[r][j];
    CHECK(ws.rows[3] == sum);
    for (long long v : ws.positive()) CHECK(v >= 1);
}

TEST_CASE("infer_weights: slice derivation needs a nonzero shift") {
    Ring r = make_ring({"x", "y"});
    Derivation d(r, {Polynomial::zero(r), Polynomial::constant(r, Rational(1))});
    WeightSystem ws = infer_weights(d);
    // delta(y) = 1 forces weight(y) + shift = 0 on every row
    for (int row = 0; row < ws.num_rows(); ++row)
        CHECK(ws.rows[row][1] + ws.shift[row] == 0);
    CHECK(ws.rows[ws.positive_row][0] >= 1);
    CHECK(ws.rows[ws.positive_row][1] >= 1);
    CHECK(ws.shift[ws.positive_row] <= -1);
}

TEST_CASE("infer_weights: inhomogeneous images fail") {
    Ring r = make_ring({"x", "y"});
    // delta(y) = x + x^2 admits no weight row with positive entries
    Derivation d(r, {Polynomial::zero(r), parse_polynomial("x + x^2", r)});
    CHECK_THROWS_AS(infer_weights(d), DomainError);
}

TEST_CASE("graded_piece basics") {
    Ring r = make_ring({"x", "y"});
    WeightSystem ws{{{1, 1}}, {0}, 0};
    auto piece = graded_piece(r, ws, {2});
    REQUIRE(piece.size() == 3);
    CHECK(piece[0] == Monomial{2, 0});
    CHECK(piece[1] == Monomial{1, 1});
    CHECK(piece[2] == Monomial{0, 2});
    CHECK(graded_piece(r, ws, {-1}).empty());
}

TEST_CASE("graded_piece matches the odometer oracle") {
    Derivation d = catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation();
    WeightSystem ws = infer_weights(d);
    Monomial x1y4{1, 0, 0, 0, 0, 0, 1};
    Weight target = weight_of(x1y4, ws);
    auto piece = graded_piece(d.ring(), ws, target);
    auto reference = oracle::odometer_piece(d.ring(), ws, target);
    CHECK(piece == reference);
    CHECK(std::find(piece.begin(), piece.end(), x1y4) != piece.end());
    CHECK(piece.size() == 3); // x1^3 x2^2 x3^2, x2^2 x3^2 y1, x1 y4
}

TEST_CASE("kernel_basis examples") {
    Derivation d = xy_shift();
    WeightSystem ws = infer_weights(d);
    auto basis = kernel_basis(d, ws, {2});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == parse_polynomial("x^2", d.ring()));

    auto constants = kernel_basis(d, ws, {0});
    REQUIRE(constants.size() == 1);
    CHECK(constants[0] == Polynomial::constant(d.ring(), Rational(1)));
}

TEST_CASE("kernel_basis: Roberts piece (3,2,2) and its regression values") {
    Derivation d = catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation();
    WeightSystem ws = infer_weights(d);
    Monomial x1y4{1, 0, 0, 0, 0, 0, 1};
    Weight target = weight_of(x1y4, ws);

    auto basis = kernel_basis(d, ws, target);
    REQUIRE(basis.size() == 2);
    // frozen on first computation; verified in-kernel and against the naive oracle
    CHECK(basis[0] == parse_polynomial("x1^3*x2^2*x3^2", d.ring()));
    CHECK(basis[1] == parse_polynomial("x1*y4 - x2^2*x3^2*y1", d.ring()));
    for (const auto& f : basis) CHECK(d.apply(f).is_zero());
    CHECK(oracle::naive_kernel_dimension(d, ws, target) == 2);
}

TEST_CASE("kernel_generators: A = k[x] for delta(y) = x") {
    Derivation d = xy_shift();
    WeightSystem ws = infer_weights(d);
    GradedKernelReport report = kernel_generators(d, ws, 6);
    REQUIRE(report.generators.size() == 1);
    CHECK(report.generators[0].poly == parse_polynomial("x", d.ring()));
    for (const auto& piece : report.pieces) {
        CHECK(piece.kernel_dimension == 1); // spanned by x^w at every weight
        if (piece.degree > 1) CHECK(piece.new_generators.empty());
    }
}

TEST_CASE("kernel_generators: roberts generator events at (3,2,2) and (5,4,4)") {
    Derivation d = catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation();
    WeightSystem ws = infer_weights(d);
    GradedKernelReport report = kernel_generators(d, ws, 13);

    Monomial x1y4{1, 0, 0, 0, 0, 0, 1};
    Monomial x1y4sq{1, 0, 0, 0, 0, 0, 2};
    Weight w1 = weight_of(x1y4, ws);
    Weight w2 = weight_of(x1y4sq, ws);

    bool event1 = false, event2 = false;
    for (const auto& g : report.generators) {
        if (g.weight == w1 && g.poly.coefficient(x1y4) != 0) event1 = true;
        if (g.weight == w2 && g.poly.coefficient(x1y4sq) != 0) event2 = true;
    }
    CHECK(event1);
    CHECK(event2);

    // every reported basis element is in the kernel, exactly
    for (const auto& piece : report.pieces)
        for (const auto& f : piece.basis) CHECK(d.apply(f).is_zero());

    // Lemma 6.5 at truncation: monomials x1^a y4^l with l > 0 have a > 0
    for (const auto& piece : report.pieces) {
        for (const auto& f : piece.basis) {
            for (const auto& [m, c] : f.terms()) {
                bool pure = m[1] == 0 && m[2] == 0 && m[3] == 0 && m[4] == 0 && m[5] == 0;
                if (pure && m[6] > 0) CHECK(m[0] > 0);
            }
        }
    }
}

TEST_CASE("kernel_generators: df5 growth evidence") {
    Derivation d = catalog_get("df5", {}).derivation();
    WeightSystem ws = infer_weights(d);
    GradedKernelReport report = kernel_generators(d, ws, 12);
    std::set<Weight> event_weights;
    for (const auto& g : report.generators) event_weights.insert(g.weight);
    CHECK(event_weights.size() >= 3);
    for (const auto& g : report.generators) CHECK(d.apply(g.poly).is_zero());
}

TEST_CASE("kernel dimensions match the brute-force oracle") {
    Derivation d = catalog_get("df5", {}).derivation();
    WeightSystem ws = infer_weights(d);
    GradedKernelReport report = kernel_generators(d, ws, 10);
    for (const auto& piece : report.pieces) {
        if (piece.piece_dimension > 200) continue;
        CHECK(piece.kernel_dimension == oracle::naive_kernel_dimension(d, ws, piece.weight));
    }
}

TEST_CASE("products of generators stay in the kernel span at their weight") {
    std::mt19937_64 rng(kSeed);
    Derivation d = catalog_get("df5", {}).derivation();
    WeightSystem ws = infer_weights(d);
    GradedKernelReport report = kernel_generators(d, ws, 10);
    REQUIRE(report.generators.size() >= 2);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        const auto& a = report.generators[rng() % report.generators.size()];
        const auto& b = report.generators[rng() % report.generators.size()];
        Weight w = a.weight;
        for (size_t r = 0; r < w.size(); ++r) w[r] += b.weight[r];
        if (w[ws.positive_row] > report.bound) continue;
        Polynomial prod = a.poly * b.poly;
        auto basis = kernel_basis(d, ws, w);
        auto piece = graded_piece(d.ring(), ws, w);
        Echelon span;
        for (const auto& f : basis) span.add(detail::coordinates(f, piece));
        CHECK(span.contains(detail::coordinates(prod, piece)));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("monotonicity: report for bound b is a prefix of bound b' > b") {
    Derivation d = catalog_get("df5", {}).derivation();
    WeightSystem ws = infer_weights(d);
    GradedKernelReport small = kernel_generators(d, ws, 7);
    GradedKernelReport large = kernel_generators(d, ws, 11);
    REQUIRE(large.generators.size() >= small.generators.size());
    for (size_t i = 0; i < small.generators.size(); ++i) {
        CHECK(small.generators[i].weight == large.generators[i].weight);
        CHECK(small.generators[i].poly == large.generators[i].poly);
    }
    REQUIRE(large.pieces.size() >= small.pieces.size());
    for (size_t i = 0; i < small.pieces.size(); ++i)
        CHECK(small.pieces[i].weight == large.pieces[i].weight);
}

TEST_CASE("serial and parallel paths produce identical reports") {
    Derivation d = catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation();
    WeightSystem ws = infer_weights(d);
    KernelOptions serial;
    serial.jobs = 1;
    KernelOptions parallel;
    parallel.jobs = 4;
    GradedKernelReport a = kernel_generators(d, ws, 9, serial);
    GradedKernelReport b = kernel_generators(d, ws, 9, parallel);
    REQUIRE(a.pieces.size() == b.pieces.size());
    for (size_t i = 0; i < a.pieces.size(); ++i) {
        CHECK(a.pieces[i].weight == b.pieces[i].weight);
        CHECK(a.pieces[i].kernel_dimension == b.pieces[i].kernel_dimension);
        REQUIRE(a.pieces[i].basis.size() == b.pieces[i].basis.size());
        for (size_t j = 0; j < a.pieces[i].basis.size(); ++j)
            CHECK(a.pieces[i].basis[j] == b.pieces[i].basis[j]);
    }
    REQUIRE(a.generators.size() == b.generators.size());
    for (size_t i = 0; i < a.generators.size(); ++i)
        CHECK(a.generators[i].poly == b.generators[i].poly);
}

TEST_CASE("piece limit produces skip entries") {
    Derivation d = catalog_get("roberts", {{"n", 3}, {"t", 2}}).derivation();
    WeightSystem ws = infer_weights(d);
    KernelOptions opt;
    opt.piece_limit = 1;
    GradedKernelReport report = kernel_generators(d, ws, 7, opt);
    bool any_skipped = false;
    for (const auto& piece : report.pieces) any_skipped |= piece.skipped;
    CHECK(any_skipped);
}
