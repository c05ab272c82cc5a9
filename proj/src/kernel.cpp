#include "lnd/kernel.hpp"

#include <exception>
#include <map>
#include <stdexcept>

#include "lnd/echelon.hpp"
#include "lnd/matrix.hpp"

namespace lnd {

namespace detail {

std::vector<Rational> coordinates(const Polynomial& f, const std::vector<Monomial>& piece) {
    std::map<Monomial, int, GrevlexGreater> index;
    for (size_t i = 0; i < piece.size(); ++i) index.emplace(piece[i], static_cast<int>(i));
    std::vector<Rational> v(piece.size(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("polynomial leaves its graded piece");
        v[it->second] = c;
    }
    return v;
}

std::vector<Polynomial> kernel_basis_on_piece(const Derivation& d, const WeightSystem& ws,
                                              const Weight& target,
                                              const std::vector<Monomial>& piece) {
    const Ring& ring = d.ring();
    if (piece.empty()) return {};

    Weight image_weight = target;
    for (int r = 0; r < ws.num_rows(); ++r) image_weight[r] += ws.shift[r];
    std::vector<Monomial> image = graded_piece(ring, ws, image_weight);
    std::map<Monomial, int, GrevlexGreater> image_index;
    for (size_t i = 0; i < image.size(); ++i) image_index.emplace(image[i], static_cast<int>(i));

    RationalMatrix m(static_cast<int>(image.size()), static_cast<int>(piece.size()));
    for (size_t j = 0; j < piece.size(); ++j) {
        Polynomial img = d.apply(Polynomial::monomial(ring, piece[j], Rational(1)));
        for (const auto& [mono, c] : img.terms()) {
            auto it = image_index.find(mono);
            if (it == image_index.end())
                throw std::logic_error("derivation image leaves the expected graded piece");
            m.at(it->second, static_cast<int>(j)) = c;
        }
    }

    std::vector<Polynomial> basis;
    for (const auto& v : nullspace(m)) {
        Polynomial f = Polynomial::zero(ring);
        for (size_t j = 0; j < piece.size(); ++j)
            if (v[j] != 0) f.add_term(piece[j], v[j]);
        basis.push_back(std::move(f));
    }
    return basis;
}

namespace {

void products_rec(const std::vector<GeneratorEntry>& gens, const WeightSystem& ws, size_t i,
                  Weight remaining, long long remaining_pdeg, const Polynomial& acc,
                  std::vector<Polynomial>& out) {
    bool zero = true;
    for (long long w : remaining)
        if (w != 0) { zero = false; break; }
    if (zero) {
        out.push_back(acc);
        return; // generators all have positive degree >= 1
    }
    if (i == gens.size() || remaining_pdeg <= 0) return;

    long long pd = gens[i].weight[ws.positive_row];
    if (pd <= 0) { // generators always sit at positive degree; skip degenerates
        products_rec(gens, ws, i + 1, remaining, remaining_pdeg, acc, out);
        return;
    }
    Polynomial power = acc;
    for (long long k = 0; k * pd <= remaining_pdeg; ++k) {
        Weight rem = remaining;
        for (size_t r = 0; r < rem.size(); ++r) rem[r] -= k * gens[i].weight[r];
        if (k > 0) power = power * gens[i].poly;
        products_rec(gens, ws, i + 1, rem, remaining_pdeg - k * pd, power, out);
    }
}

} // namespace

std::vector<Polynomial> generator_products(const std::vector<GeneratorEntry>& gens,
                                           const WeightSystem& ws, const Weight& target,
                                           const Ring& ring) {
    std::vector<Polynomial> out;
    products_rec(gens, ws, 0, target, target[ws.positive_row],
                 Polynomial::constant(ring, Rational(1)), out);
    return out;
}

} // namespace detail

std::vector<Polynomial> kernel_basis(const Derivation& d, const WeightSystem& ws,
                                     const Weight& target) {
    return detail::kernel_basis_on_piece(d, ws, target, graded_piece(d.ring(), ws, target));
}

namespace {

PieceReport solve_piece(const Derivation& d, const WeightSystem& ws, const WeightBucket& bucket,
                        const std::vector<GeneratorEntry>& gens, int piece_limit) {
    PieceReport report;
    report.weight = bucket.weight;
    report.degree = bucket.degree;
    report.piece_dimension = static_cast<int>(bucket.monomials.size());
    if (report.piece_dimension > piece_limit) {
        report.skipped = true;
        return report;
    }

    report.basis = detail::kernel_basis_on_piece(d, ws, bucket.weight, bucket.monomials);
    report.kernel_dimension = static_cast<int>(report.basis.size());
    if (report.basis.empty()) return report;

    Echelon span;
    for (const Polynomial& p : detail::generator_products(gens, ws, bucket.weight, d.ring())) {
        if (p.is_zero()) continue;
        span.add(detail::coordinates(p, bucket.monomials));
    }
    report.span_dimension = span.rank();
    for (const Polynomial& f : report.basis)
        if (span.add(detail::coordinates(f, bucket.monomials))) report.new_generators.push_back(f);
    return report;
}

} // namespace

GradedKernelReport kernel_generators(const Derivation& d, const WeightSystem& ws, long long bound,
                                     const KernelOptions& options) {
    if (bound < 0) throw DomainError("weight bound must be non-negative");
    GradedKernelReport report;
    report.bound = bound;
    report.weights = ws;

    std::vector<WeightBucket> buckets = enumerate_buckets(d.ring(), ws, bound);
    std::vector<GeneratorEntry> gens;

    size_t start = 0;
    while (start < buckets.size()) {
        size_t end = start;
        while (end < buckets.size() && buckets[end].degree == buckets[start].degree) ++end;
        int count = static_cast<int>(end - start);
        std::vector<PieceReport> level(count);

        if (options.jobs > 1) {
            std::exception_ptr error;
#ifdef LND_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
#endif
            for (int i = 0; i < count; ++i) {
                try {
                    level[i] = solve_piece(d, ws, buckets[start + i], gens, options.piece_limit);
                } catch (...) {
#ifdef LND_HAVE_OPENMP
#pragma omp critical
#endif
                    error = std::current_exception();
                }
            }
            if (error) std::rethrow_exception(error);
        } else {
            // Serial reference path; kept explicit so tests and the benchmark
            // can compare it with the parallel one.
            for (int i = 0; i < count; ++i)
                level[i] = solve_piece(d, ws, buckets[start + i], gens, options.piece_limit);
        }

        for (int i = 0; i < count; ++i) {
            for (const Polynomial& g : level[i].new_generators)
                gens.push_back({level[i].weight, g});
            report.pieces.push_back(std::move(level[i]));
        }
        start = end;
    }

    report.generators = gens;
    return report;
}

} // namespace lnd
