#pragma once

#include <optional>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

// Dense exact-rational matrix, row-major.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<int> pivots; // pivot column per pivot row, strictly increasing
    int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduced row echelon form. Forward elimination is fraction-free
// (Bareiss) over scaled integer rows; the result is normalized to the unique
// rational RREF at the end.
RrefResult rref(const RationalMatrix& m);

// Canonical kernel basis from the RREF free-column construction, ordered by
// ascending free column. Each vector v satisfies m*v = 0 exactly.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Unique solution of a square-rank system A x = b, if any.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a,
                                                  const std::vector<Rational>& b);

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v);

} // namespace lnd
