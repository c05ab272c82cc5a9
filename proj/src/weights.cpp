#include "lnd/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lnd/matrix.hpp"

namespace lnd {

Weight weight_of(const Monomial& m, const WeightSystem& ws) {
    Weight w(ws.num_rows(), 0);
    for (int r = 0; r < ws.num_rows(); ++r)
        for (size_t i = 0; i < m.size(); ++i) w[r] += ws.rows[r][i] * m[i];
    return w;
}

long long positive_degree(const Monomial& m, const WeightSystem& ws) {
    long long d = 0;
    const auto& p = ws.positive();
    for (size_t i = 0; i < m.size(); ++i) d += p[i] * m[i];
    return d;
}

std::optional<Weight> homogeneous_weight(const Polynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) return std::nullopt;
    std::optional<Weight> w;
    for (const auto& [m, c] : f.terms()) {
        Weight mw = weight_of(m, ws);
        if (!w)
            w = mw;
        else if (*w != mw)
            return std::nullopt;
    }
    return w;
}

namespace {

// Primitive integer vector out of a rational one: clear denominators, divide
// by the content, make the first nonzero entry positive.
std::vector<long long> primitive_integer(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> z;
    z.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Rational s = q * Rational(l);
        z.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g == 0) g = 1;
    int sign = 0;
    for (const auto& x : z)
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    if (sign < 0) g = -g;
    std::vector<long long> out;
    out.reserve(z.size());
    for (const auto& x : z) {
        Integer q = x / g;
        if (!q.fits_slong_p())
            throw DomainError("weight lattice entry does not fit a machine integer");
        out.push_back(q.get_si());
    }
    return out;
}

// Row-style Hermite normal form: echelon with positive pivots and entries
// above each pivot reduced into [0, pivot). Canonical basis of the row
// lattice, so the inferred grading has a stable, readable presentation.
void hermite_normal_form(std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return;
    size_t k = rows.size(), n = rows[0].size();
    std::vector<std::vector<Integer>> a(k, std::vector<Integer>(n));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = to_integer(rows[i][j]);

    size_t r = 0;
    for (size_t col = 0; col < n && r < k; ++col) {
        while (true) {
            size_t best = k;
            for (size_t i = r; i < k; ++i)
                if (a[i][col] != 0 && (best == k || abs(a[i][col]) < abs(a[best][col]))) best = i;
            if (best == k) break;
            std::swap(a[r], a[best]);
            bool all_zero_below = true;
            for (size_t i = r + 1; i < k; ++i) {
                if (a[i][col] == 0) continue;
                Integer q = a[i][col] / a[r][col]; // truncated division keeps |remainder| small
                for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
                if (a[i][col] != 0) all_zero_below = false;
            }
            if (all_zero_below) break;
        }
        if (a[r][col] == 0) continue;
        if (a[r][col] < 0)
            for (size_t j = 0; j < n; ++j) a[r][j] = -a[r][j];
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }

    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!a[i][j].fits_slong_p())
                throw DomainError("weight lattice entry does not fit a machine integer");
            rows[i][j] = a[i][j].get_si();
        }
}

// Integer lattice basis of the solution space of rows * x = 0.
std::vector<std::vector<long long>> integer_nullspace(const std::vector<std::vector<long long>>& rows,
                                                      int cols) {
    if (rows.empty()) {
        std::vector<std::vector<long long>> basis;
        for (int i = 0; i < cols; ++i) {
            std::vector<long long> e(cols, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = to_rational(rows[i][j]);
    std::vector<std::vector<long long>> basis;
    for (const auto& v : nullspace(m)) basis.push_back(primitive_integer(v));
    return basis;
}

// Search small integer combinations of the basis rows for one whose first
// `nvars` entries are all >= 1.
std::optional<std::pair<std::vector<long long>, std::vector<long long>>>
find_positive_combination(const std::vector<std::vector<long long>>& basis, int nvars) {
    constexpr long long kMaxEntry = 1000000;
    int k = static_cast<int>(basis.size());
    if (k == 0) return std::nullopt;
    int max_height = k <= 4 ? 6 : (k <= 6 ? 3 : 2);
    std::vector<long long> combo(k, 0);
    std::vector<long long> value(basis[0].size(), 0);

    auto evaluate = [&](const std::vector<long long>& c) {
        std::vector<long long> v(basis[0].size(), 0);
        for (int i = 0; i < k; ++i)
            for (size_t j = 0; j < v.size(); ++j) v[j] += c[i] * basis[i][j];
        return v;
    };
    auto positive = [&](const std::vector<long long>& v) {
        for (int j = 0; j < nvars; ++j)
            if (v[j] < 1 || v[j] > kMaxEntry) return false;
        return true;
    };

    // All-ones first: it is the common case (sum of the basis rows).
    std::vector<long long> ones(k, 1);
    value = evaluate(ones);
    if (positive(value)) return std::make_pair(ones, value);

    for (int h = 1; h <= max_height; ++h) {
        std::fill(combo.begin(), combo.end(), -h);
        while (true) {
            bool on_shell = false;
            for (long long c : combo)
                if (c == h || c == -h) { on_shell = true; break; }
            if (on_shell) {
                value = evaluate(combo);
                if (positive(value)) return std::make_pair(combo, value);
            }
            int i = k - 1;
            while (i >= 0 && combo[i] == h) combo[i--] = -h;
            if (i < 0) break;
            ++combo[i];
        }
    }
    return std::nullopt;
}

struct LatticeResult {
    std::vector<std::vector<long long>> rows; // over (w_1..w_n, s)
    bool found = false;
};

// Constraint rows over unknowns (w_1..w_n, s): for each variable with a
// nonzero image and each of its monomials, <w, exp(m)> - w_i - s = 0.
LatticeResult solve_weight_lattice(const Derivation& d, bool force_zero_shift) {
    int n = d.ring()->arity();
    int cols = n + 1;
    std::vector<std::vector<long long>> constraints;
    for (int i = 0; i < n; ++i) {
        for (const auto& [m, c] : d.image(i).terms()) {
            std::vector<long long> row(cols, 0);
            for (int j = 0; j < n; ++j) row[j] = m[j];
            row[i] -= 1;
            row[n] = -1;
            constraints.push_back(std::move(row));
        }
    }
    if (force_zero_shift) {
        std::vector<long long> row(cols, 0);
        row[n] = 1;
        constraints.push_back(std::move(row));
    }
    LatticeResult res;
    res.rows = integer_nullspace(constraints, cols);
    hermite_normal_form(res.rows);
    res.found = !res.rows.empty();
    return res;
}

} // namespace

WeightSystem infer_weights(const Derivation& d) {
    int n = d.ring()->arity();

    auto assemble = [&](const std::vector<std::vector<long long>>& lattice)
        -> std::optional<WeightSystem> {
        auto combo = find_positive_combination(lattice, n);
        if (!combo) return std::nullopt;
        WeightSystem ws;
        int positive_index = -1;
        for (size_t i = 0; i < lattice.size(); ++i) {
            bool pos = true;
            for (int j = 0; j < n; ++j)
                if (lattice[i][j] < 1) { pos = false; break; }
            ws.rows.push_back(std::vector<long long>(lattice[i].begin(), lattice[i].begin() + n));
            ws.shift.push_back(lattice[i][n]);
            if (pos && positive_index < 0) positive_index = static_cast<int>(i);
        }
        if (positive_index < 0) {
            const auto& v = combo->second;
            ws.rows.push_back(std::vector<long long>(v.begin(), v.begin() + n));
            ws.shift.push_back(v[n]);
            positive_index = static_cast<int>(ws.rows.size()) - 1;
        }
        ws.positive_row = positive_index;
        return ws;
    };

    LatticeResult zero_shift = solve_weight_lattice(d, true);
    std::optional<WeightSystem> ws;
    if (zero_shift.found) ws = assemble(zero_shift.rows);
    if (!ws) {
        LatticeResult full = solve_weight_lattice(d, false);
        if (!full.found)
            throw DomainError("images are inhomogeneous: no weight system exists");
        ws = assemble(full.rows);
        if (!ws)
            throw DomainError("no positive weight row found (entries bounded by 10^6)");
    }

    // Recheck homogeneity row by row.
    for (int i = 0; i < n; ++i) {
        const Polynomial& img = d.image(i);
        if (img.is_zero()) continue;
        auto w = homogeneous_weight(img, *ws);
        if (!w) throw DomainError("images are inhomogeneous: no weight system exists");
        for (int r = 0; r < ws->num_rows(); ++r)
            if ((*w)[r] - ws->rows[r][i] != ws->shift[r])
                throw DomainError("inferred weight system failed validation");
    }
    return *ws;
}

namespace {

void enumerate_rec(const Ring& ring, const WeightSystem& ws, int var, Monomial& current,
                   long long remaining_pdeg, const Weight& target, Weight& acc,
                   std::vector<Monomial>& out) {
    int n = ring->arity();
    if (var == n) {
        if (remaining_pdeg == 0 && acc == target) out.push_back(current);
        return;
    }
    long long p = ws.positive()[var];
    for (int e = 0; e * p <= remaining_pdeg; ++e) {
        current[var] = e;
        for (int r = 0; r < ws.num_rows(); ++r) acc[r] += static_cast<long long>(e) * ws.rows[r][var];
        enumerate_rec(ring, ws, var + 1, current, remaining_pdeg - e * p, target, acc, out);
        for (int r = 0; r < ws.num_rows(); ++r) acc[r] -= static_cast<long long>(e) * ws.rows[r][var];
        current[var] = 0;
    }
}

} // namespace

std::vector<Monomial> graded_piece(const Ring& ring, const WeightSystem& ws, const Weight& target) {
    if (static_cast<int>(target.size()) != ws.num_rows())
        throw DomainError("target weight has wrong length");
    long long pdeg = target[ws.positive_row];
    std::vector<Monomial> out;
    if (pdeg < 0) return out;
    Monomial current(ring->arity(), 0);
    Weight acc(ws.num_rows(), 0);
    enumerate_rec(ring, ws, 0, current, pdeg, target, acc, out);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

std::vector<WeightBucket> enumerate_buckets(const Ring& ring, const WeightSystem& ws,
                                            long long bound) {
    std::map<Weight, std::vector<Monomial>> buckets;
    int n = ring->arity();
    Monomial current(n, 0);

    // Odometer over exponents bounded by the positive row.
    std::function<void(int, long long)> rec = [&](int var, long long remaining) {
        if (var == n) {
            buckets[weight_of(current, ws)].push_back(current);
            return;
        }
        long long p = ws.positive()[var];
        for (int e = 0; e * p <= remaining; ++e) {
            current[var] = e;
            rec(var + 1, remaining - e * p);
            current[var] = 0;
        }
    };
    rec(0, bound);

    std::vector<WeightBucket> out;
    for (auto& [w, monos] : buckets) {
        std::sort(monos.begin(), monos.end(), grevlex_greater);
        out.push_back({w, w[ws.positive_row], std::move(monos)});
    }
    std::sort(out.begin(), out.end(), [](const WeightBucket& a, const WeightBucket& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.weight < b.weight;
    });
    return out;
}

std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

} // namespace lnd
