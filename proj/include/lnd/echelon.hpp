#pragma once

#include <utility>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

// Incremental row echelon over Q, used for span-membership tests. Rows are
// stored pivot-normalized and fully reduced against earlier rows; insertion
// order is deterministic, so the structure is too.
class Echelon {
  public:
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0) continue;
            Rational f = v[pivot];
            for (size_t j = 0; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
        return v;
    }

    // Returns true (and absorbs the residual) when v enlarges the span.
    bool add(const std::vector<Rational>& v) {
        std::vector<Rational> r = reduce(v);
        int pivot = -1;
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) { pivot = static_cast<int>(j); break; }
        if (pivot < 0) return false;
        Rational inv = Rational(1) / r[pivot];
        for (auto& x : r) x *= inv;
        rows_.emplace_back(pivot, std::move(r));
        return true;
    }

    bool contains(const std::vector<Rational>& v) const {
        for (const Rational& x : reduce(v))
            if (x != 0) return false;
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::vector<std::pair<int, std::vector<Rational>>> rows_;
};

} // namespace lnd
