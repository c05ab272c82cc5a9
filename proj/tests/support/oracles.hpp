#pragma once

// Test-side oracles, deliberately independent of the library's computational
// paths: naive rational Gauss-Jordan (vs fraction-free rref), odometer
// monomial enumeration (vs the pruned recursive enumeration), and brute-force
// vertex enumeration (vs Fourier-Motzkin).

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lnd/kuroda.hpp"
#include "lnd/matrix.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/weights.hpp"

namespace oracle {

using namespace lnd;

// Textbook Gauss-Jordan with rational pivoting.
struct NaiveRref {
    RationalMatrix matrix;
    std::vector<int> pivots;
};

inline NaiveRref naive_rref(RationalMatrix m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::vector<std::vector<Rational>> naive_nullspace(const RationalMatrix& m) {
    NaiveRref r = naive_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Plain odometer enumeration of the monomials of one weight, bounded per
// variable by the positive row.
inline std::vector<Monomial> odometer_piece(const Ring& ring, const WeightSystem& ws,
                                            const Weight& target) {
    std::vector<Monomial> out;
    long long pdeg = target[ws.positive_row];
    if (pdeg < 0) return out;
    int n = ring->arity();
    std::vector<int> maxe(n);
    for (int i = 0; i < n; ++i) maxe[i] = static_cast<int>(pdeg / ws.positive()[i]);
    Monomial m(n, 0);
    while (true) {
        if (weight_of(m, ws) == target) out.push_back(m);
        int i = 0;
        while (i < n && m[i] == maxe[i]) m[i++] = 0;
        if (i == n) break;
        ++m[i];
    }
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

// Kernel dimension of delta on one graded piece, by dense enumeration and
// naive Gauss-Jordan.
inline int naive_kernel_dimension(const Derivation& d, const WeightSystem& ws,
                                  const Weight& target) {
    std::vector<Monomial> piece = odometer_piece(d.ring(), ws, target);
    if (piece.empty()) return 0;
    Weight image_weight = target;
    for (int r = 0; r < ws.num_rows(); ++r) image_weight[r] += ws.shift[r];
    std::vector<Monomial> image = odometer_piece(d.ring(), ws, image_weight);
    std::map<Monomial, int, GrevlexGreater> index;
    for (size_t i = 0; i < image.size(); ++i) index.emplace(image[i], static_cast<int>(i));
    RationalMatrix m(static_cast<int>(image.size()), static_cast<int>(piece.size()));
    for (size_t j = 0; j < piece.size(); ++j) {
        Polynomial img = d.apply(Polynomial::monomial(d.ring(), piece[j], Rational(1)));
        for (const auto& [mono, c] : img.terms()) m.at(index.at(mono), static_cast<int>(j)) = c;
    }
    return static_cast<int>(naive_nullspace(m).size());
}

// Brute-force LP feasibility: intersect all constraint subsets of size = dim,
// test the candidate vertices. Valid when a nonempty feasible region has at
// least one vertex (our random systems include a bounding box).
inline bool vertex_feasible(const std::vector<LinearConstraint>& constraints, int num_vars) {
    std::vector<std::pair<std::vector<Rational>, Rational>> rows;
    for (const auto& c : constraints) {
        rows.push_back({c.coeffs, c.rhs});
        if (c.is_equality) {
            std::vector<Rational> neg;
            for (const auto& a : c.coeffs) neg.push_back(-a);
            rows.push_back({neg, -c.rhs});
        }
    }
    auto satisfied = [&](const std::vector<Rational>& x) {
        for (const auto& [coeffs, rhs] : rows) {
            Rational lhs = 0;
            for (int j = 0; j < num_vars; ++j) lhs += coeffs[j] * x[j];
            if (lhs < rhs) return false;
        }
        return true;
    };

    int m = static_cast<int>(rows.size());
    std::vector<int> idx(num_vars);
    std::function<bool(int, int)> rec = [&](int start, int chosen) -> bool {
        if (chosen == num_vars) {
            RationalMatrix a(num_vars, num_vars);
            std::vector<Rational> b(num_vars);
            for (int i = 0; i < num_vars; ++i) {
                for (int j = 0; j < num_vars; ++j) a.at(i, j) = rows[idx[i]].first[j];
                b[i] = rows[idx[i]].second;
            }
            auto x = solve_unique(a, b);
            return x && satisfied(*x);
        }
        for (int i = start; i < m; ++i) {
            idx[chosen] = i;
            if (rec(i + 1, chosen + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Deterministic random helpers.
inline Rational random_rational(std::mt19937_64& rng, int max_abs = 6) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 4);
    return make_rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_terms = 4,
                                    int max_exp = 3) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    Polynomial f = Polynomial::zero(ring);
    int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->arity());
        for (int i = 0; i < ring->arity(); ++i) m[i] = exp(rng);
        f.add_term(m, random_rational(rng));
    }
    return f;
}

} // namespace oracle
