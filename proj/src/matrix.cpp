#include "lnd/matrix.hpp"

#include <stdexcept>

namespace lnd {

namespace {

// One-step fraction-free (Bareiss) row echelon form on integer rows.
// Returns pivot columns; rows end up with zeros below each pivot and every
// division along the way is exact.
std::vector<int> bareiss_echelon(std::vector<std::vector<Integer>>& a, int cols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.size());
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                Integer q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("fraction-free elimination: inexact division");
                a[i][j] = q;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RrefResult rref(const RationalMatrix& m) {
    int rows = m.rows(), cols = m.cols();

    // Scale each row to integers.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        Integer l = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < cols; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            a[i][j] = v.get_num();
        }
    }

    std::vector<int> pivots = bareiss_echelon(a, cols);

    // Normalize to RREF over the rationals.
    RationalMatrix r(rows, cols);
    int rank = static_cast<int>(pivots.size());
    for (int i = 0; i < rank; ++i) {
        Rational inv = make_rational(Integer(1), a[i][pivots[i]]);
        for (int j = 0; j < cols; ++j) r.at(i, j) = Rational(a[i][j]) * inv;
    }
    for (int i = rank - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            Rational f = r.at(k, pivots[i]);
            if (f == 0) continue;
            for (int j = pivots[i]; j < cols; ++j) r.at(k, j) -= f * r.at(i, j);
        }
    }
    return {std::move(r), std::move(pivots)};
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RrefResult r = rref(m);
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.matrix.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
    int rows = a.rows(), cols = a.cols();
    RationalMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cols) = b[i];
    }
    RrefResult r = rref(aug);
    for (int p : r.pivots)
        if (p == cols) return std::nullopt; // inconsistent
    if (r.rank() != cols) return std::nullopt; // underdetermined
    std::vector<Rational> x(cols, Rational(0));
    for (int i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.matrix.at(i, cols);
    return x;
}

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> out(a.rows(), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && v[j] != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

} // namespace lnd
