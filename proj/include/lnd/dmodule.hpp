#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/groebner.hpp"
#include "lnd/kernel.hpp"
#include "lnd/weights.hpp"

namespace lnd {

// A (B, delta)-module presented on a free basis: delta_M(e_j) =
// sum_i connection[i][j] e_i, plus optional homogeneous relations that cut
// out a quotient. Construction validates that delta_M descends to the
// quotient and is locally nilpotent (strictly triangular connection under
// some basis order, or empirically below the iteration cap).
class DeltaModule {
  public:
    DeltaModule(Derivation base, std::vector<std::string> basis,
                std::vector<std::vector<Polynomial>> connection,
                std::vector<ModuleElement> relations, int cap = kDefaultNilpotencyCap);

    const Derivation& base() const { return base_; }
    const Ring& ring() const { return base_.ring(); }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<std::vector<Polynomial>>& connection() const { return connection_; }
    const std::vector<ModuleElement>& relations() const { return relations_; }
    bool is_free() const { return relations_.empty(); }
    const ModuleGroebnerBasis* relations_gb() const {
        return relations_.empty() ? nullptr : &relations_gb_;
    }

    // Normal form modulo the relation submodule (identity when free).
    ModuleElement normal_form(const ModuleElement& z) const;

    std::string element_to_string(const ModuleElement& z) const {
        return me_to_string(z, basis_);
    }

  private:
    Derivation base_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Polynomial>> connection_;
    std::vector<ModuleElement> relations_;
    ModuleGroebnerBasis relations_gb_;
};

// delta_M(z), reduced to normal form when relations are present.
ModuleElement apply_module(const DeltaModule& m, const ModuleElement& z);

// Kaehler differentials Omega_{B/k}: free on d<var>, with
// delta_M(d x_j) = d(delta(x_j)) realized as connection[i][j] =
// partial(delta(x_j))/partial(x_i).
DeltaModule omega(const Derivation& d);

// df = sum_i partial(f)/partial(x_i) * dx_i, an element of omega.
ModuleElement differential(const Polynomial& f);

// Lemma-2.9 constructions on free modules over the same base derivation.
DeltaModule tensor(const DeltaModule& m, const DeltaModule& n);
DeltaModule hom(const DeltaModule& m, const DeltaModule& n);

// Unique degree-zero extension of delta_M to the symmetric algebra: a
// derivation on the ring extended by the basis names.
Derivation sym_extend(const DeltaModule& m);

// Basis weights per grading row, normalized so the smallest basis index of
// each connected component gets weight zero. Fails when the connection or a
// relation is not homogeneous under ws.
struct ModuleWeights {
    std::vector<std::vector<long long>> rows; // g x rank
};

ModuleWeights infer_basis_weights(const DeltaModule& m, const WeightSystem& ws);

// Standard module monomials (monomial, basis index) of the given weight:
// free monomials minus those divisible by a relation lead term.
std::vector<std::pair<Monomial, int>> module_graded_piece(const DeltaModule& m,
                                                          const WeightSystem& ws,
                                                          const ModuleWeights& mw,
                                                          const Weight& target);

std::vector<ModuleElement> module_kernel_basis(const DeltaModule& m, const WeightSystem& ws,
                                               const ModuleWeights& mw, const Weight& target);
// Convenience overload: infers ws and mw.
std::vector<ModuleElement> module_kernel_basis(const DeltaModule& m, const Weight& target);

struct ModulePieceReport {
    Weight weight;
    long long degree = 0;
    int piece_dimension = 0;
    bool skipped = false;
    int kernel_dimension = 0;
    std::vector<ModuleElement> basis;
    int span_dimension = 0;
    std::vector<ModuleElement> new_generators;
};

struct ModuleGeneratorEntry {
    Weight weight;
    ModuleElement element;
};

struct ModuleKernelReport {
    long long bound = 0;
    WeightSystem weights;
    ModuleWeights basis_weights;
    // Ring-kernel generators up to the same bound; A-coefficients beyond the
    // bound are invisible to the span test, which the report records.
    long long ring_generator_bound = 0;
    std::vector<GeneratorEntry> ring_generators;
    std::vector<ModulePieceReport> pieces;
    std::vector<ModuleGeneratorEntry> generators;
};

// Weight-by-weight M_0 bases with generator detection against spans of
// {ring-generator product * earlier module generator}.
ModuleKernelReport module_kernel_generators(const DeltaModule& m, const WeightSystem& ws,
                                            long long bound, const KernelOptions& options = {});

} // namespace lnd
