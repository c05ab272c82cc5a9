#pragma once

#include <string>
#include <vector>

#include "lnd/weights.hpp"

namespace lnd {

struct KernelOptions {
    int jobs = 1;              // 1 = serial reference path, >1 = OpenMP
    int piece_limit = 20000;   // skip graded pieces with more monomials
};

// Per-weight slice of the truncated kernel computation.
struct PieceReport {
    Weight weight;
    long long degree = 0; // positive-row value
    int piece_dimension = 0;
    bool skipped = false;
    int kernel_dimension = 0;
    std::vector<Polynomial> basis;
    int span_dimension = 0; // span of products of earlier generators
    std::vector<Polynomial> new_generators;
};

struct GeneratorEntry {
    Weight weight;
    Polynomial poly;
};

struct GradedKernelReport {
    long long bound = 0;
    WeightSystem weights;
    std::vector<PieceReport> pieces; // every nonempty piece up to the bound
    std::vector<GeneratorEntry> generators;
};

// Canonical basis of { f homogeneous of weight target : delta(f) = 0 },
// via the nullspace of delta restricted to the graded piece.
std::vector<Polynomial> kernel_basis(const Derivation& d, const WeightSystem& ws,
                                     const Weight& target);

// Weight-by-weight kernel bases with incremental generator detection: a basis
// element is a new generator when it falls outside the span of same-weight
// products of previously found generators. Deterministic regardless of jobs.
GradedKernelReport kernel_generators(const Derivation& d, const WeightSystem& ws, long long bound,
                                     const KernelOptions& options = {});

// Internals shared with the module-kernel computation.
namespace detail {

std::vector<Polynomial> kernel_basis_on_piece(const Derivation& d, const WeightSystem& ws,
                                              const Weight& target,
                                              const std::vector<Monomial>& piece);

// All products of generator powers of exactly the given weight, in
// deterministic DFS order (includes the empty product when target == 0).
std::vector<Polynomial> generator_products(const std::vector<GeneratorEntry>& gens,
                                           const WeightSystem& ws, const Weight& target,
                                           const Ring& ring);

std::vector<Rational> coordinates(const Polynomial& f, const std::vector<Monomial>& piece);

} // namespace detail

} // namespace lnd
