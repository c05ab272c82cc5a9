#pragma once

#include <string>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

// Monomial-image exponent data for D(y_j) = x^{delta_j} on
// k[x_1..x_m, y_1..y_r]. Validation enforces r >= 4, m >= r-1 and
// epsilon^i_{i,j} > 0 for 1 <= i <= r-1, j != i.
struct ExponentData {
    int m = 0;
    int r = 0;
    std::vector<std::vector<long long>> delta; // r vectors in Z^m
};

void validate_exponent_data(const ExponentData& data);

// coeffs . u >= rhs, or equality when is_equality.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool is_equality = false;

    std::string to_string() const;
};

// The linear system L_{k,r-2}: the simplex equality, the eta lower bound on
// u_1, positivity of the other variables, and one shifted row per
// i = 2..r-1 with coefficients min{eps^i_{r,1}, eps^i_{r,j+1}}.
struct KurodaSystem {
    int k = 0;
    int num_vars = 0;
    Rational eta;
    std::vector<Rational> eta_k;                    // eta_{k,i}, i = 2..r-1
    std::vector<std::vector<Rational>> row_coeffs;  // per i = 2..r-1
    std::vector<LinearConstraint> constraints;      // full system, canonical order
};

std::vector<KurodaSystem> build_systems(const ExponentData& data);

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> witness;   // verified against every constraint
    std::vector<std::string> trace;  // per-variable elimination audit
};

// Exact Fourier-Motzkin elimination with witness back-substitution. Rational
// feasibility decides real feasibility for these closed rational systems.
FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints, int num_vars);
FeasibilityResult feasible(const KurodaSystem& system);

struct KurodaVerdict {
    bool satisfied = false; // every k feasible
    int failing_k = -1;
    std::vector<KurodaSystem> systems;
    std::vector<FeasibilityResult> results; // aligned with systems
    std::string verdict_text() const {
        return satisfied ? "criterion satisfied: kernel not finitely generated"
                         : "criterion inconclusive";
    }
};

KurodaVerdict kuroda_verdict(const ExponentData& data);

} // namespace lnd
