#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"

namespace lnd {

using Weight = std::vector<long long>; // one value per grading row

// Integer multigrading under which the derivation is homogeneous: for every
// row r and variable i with delta(x_i) != 0,
//   weight_r(delta(x_i)) - weight_r(x_i) = shift[r].
// rows[positive_row] has all entries >= 1 and drives bounded enumeration.
struct WeightSystem {
    std::vector<std::vector<long long>> rows; // g x n
    std::vector<long long> shift;             // length g
    int positive_row = 0;

    int num_rows() const { return static_cast<int>(rows.size()); }
    int arity() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    const std::vector<long long>& positive() const { return rows[positive_row]; }
};

Weight weight_of(const Monomial& m, const WeightSystem& ws);
long long positive_degree(const Monomial& m, const WeightSystem& ws);

// Weight of a homogeneous polynomial; nullopt for zero or inhomogeneous input.
std::optional<Weight> homogeneous_weight(const Polynomial& f, const WeightSystem& ws);

// Solve the homogeneity constraints for a maximal-rank integer lattice of
// grading rows. Rows with shift zero are preferred; the shifted lattice is the
// fallback (e.g. derivations with a slice). A positive row is found by
// searching small integer combinations of the basis and appended when no
// basis row qualifies. Throws DomainError when the images admit no weight
// system or no positive row with entries <= 10^6 exists.
WeightSystem infer_weights(const Derivation& d);

// Exactly the monomials of the given weight, grevlex-descending. Bounded by
// the positive row; negative positive-degree targets give the empty list.
std::vector<Monomial> graded_piece(const Ring& ring, const WeightSystem& ws, const Weight& target);

// All monomials with positive-degree <= bound, grouped by weight. Buckets are
// ordered by (positive degree, weight lex) and each bucket grevlex-descending.
struct WeightBucket {
    Weight weight;
    long long degree; // positive-row value
    std::vector<Monomial> monomials;
};
std::vector<WeightBucket> enumerate_buckets(const Ring& ring, const WeightSystem& ws,
                                            long long bound);

std::string weight_to_string(const Weight& w);

} // namespace lnd
