#include "lnd/kuroda.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lnd/errors.hpp"

namespace lnd {

void validate_exponent_data(const ExponentData& data) {
    if (data.r < 4)
        throw DomainError("assumption r >= 4 violated (r = " + std::to_string(data.r) + ")");
    if (data.m < data.r - 1)
        throw DomainError("assumption m >= r-1 violated (m = " + std::to_string(data.m) +
                          ", r = " + std::to_string(data.r) + ")");
    if (static_cast<int>(data.delta.size()) != data.r)
        throw DomainError("exponent data needs exactly r vectors");
    for (const auto& v : data.delta)
        if (static_cast<int>(v.size()) != data.m)
            throw DomainError("exponent vector length differs from m");
    for (int i = 1; i <= data.r - 1; ++i) {
        for (int j = 1; j <= data.r; ++j) {
            if (j == i) continue;
            long long e = data.delta[i - 1][i - 1] - data.delta[j - 1][i - 1];
            if (e <= 0)
                throw DomainError("assumption epsilon^i_{i,j} > 0 violated for i = " +
                                  std::to_string(i) + ", j = " + std::to_string(j));
        }
    }
}

std::string LinearConstraint::to_string() const {
    std::string s;
    bool all_zero = true;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        all_zero = false;
        Rational a = abs(coeffs[j]);
        if (s.empty())
            s += coeffs[j] < 0 ? "-" : "";
        else
            s += coeffs[j] < 0 ? " - " : " + ";
        if (a != 1) s += a.get_str() + "*";
        s += "u" + std::to_string(j + 1);
    }
    if (all_zero) s = "0";
    s += is_equality ? " = " : " >= ";
    s += rhs.get_str();
    return s;
}

std::vector<KurodaSystem> build_systems(const ExponentData& data) {
    validate_exponent_data(data);
    int r = data.r;
    // component c of delta_i - delta_j, 1-based everywhere
    auto eps = [&](int i, int j, int c) -> long long {
        return data.delta[i - 1][c - 1] - data.delta[j - 1][c - 1];
    };

    long long min_den = eps(1, 2, 1);
    for (int j = 3; j <= r - 1; ++j) min_den = std::min(min_den, eps(1, j, 1));
    Rational eta = make_rational(to_integer(eps(1, r, 1)), to_integer(min_den));

    std::vector<KurodaSystem> systems;
    for (int k = 3; k <= r - 1; ++k) {
        KurodaSystem sys;
        sys.k = k;
        sys.num_vars = r - 2;
        sys.eta = eta;

        LinearConstraint simplex;
        simplex.coeffs.assign(r - 2, Rational(1));
        simplex.rhs = 1;
        simplex.is_equality = true;
        sys.constraints.push_back(simplex);

        for (int j = 1; j <= r - 2; ++j) {
            LinearConstraint bound;
            bound.coeffs.assign(r - 2, Rational(0));
            bound.coeffs[j - 1] = 1;
            bound.rhs = j == 1 ? eta : Rational(0);
            sys.constraints.push_back(bound);
        }

        for (int i = 2; i <= r - 1; ++i) {
            long long max_ik = std::max(eps(1, k, i), eps(2, k, i));
            Rational eta_ki = eta * to_rational(std::min(max_ik, 0LL));
            sys.eta_k.push_back(eta_ki);

            LinearConstraint row;
            row.coeffs.reserve(r - 2);
            for (int j = 1; j <= r - 2; ++j)
                row.coeffs.push_back(to_rational(std::min(eps(r, 1, i), eps(r, j + 1, i))));
            row.rhs = -eta_ki;
            sys.row_coeffs.push_back(row.coeffs);
            sys.constraints.push_back(row);
        }
        systems.push_back(std::move(sys));
    }
    return systems;
}

namespace {

// Scale to integer coefficients with content 1; the direction is preserved
// because the factor is positive. Used for deduplication only.
std::string constraint_key(const std::vector<Rational>& coeffs, const Rational& rhs) {
    Integer l = 1;
    for (const auto& q : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> z;
    for (const auto& q : coeffs) {
        z.push_back(Rational(q * Rational(l)).get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    Integer zr = Rational(rhs * Rational(l)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zr.get_mpz_t());
    if (g == 0) g = 1;
    std::string key;
    for (const auto& x : z) key += Integer(x / g).get_str() + ",";
    key += "|" + Integer(zr / g).get_str();
    return key;
}

struct Inequality {
    std::vector<Rational> coeffs; // coeffs . u >= rhs
    Rational rhs;
};

} // namespace

FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints, int num_vars) {
    FeasibilityResult result;

    std::vector<Inequality> current;
    for (const auto& c : constraints) {
        if (static_cast<int>(c.coeffs.size()) != num_vars)
            throw DomainError("constraint arity mismatch");
        current.push_back({c.coeffs, c.rhs});
        if (c.is_equality) {
            std::vector<Rational> neg;
            for (const auto& a : c.coeffs) neg.push_back(-a);
            current.push_back({std::move(neg), -c.rhs});
        }
    }

    // Eliminate u_{num_vars} down to u_1, keeping each intermediate system
    // for the back-substitution pass.
    std::vector<std::vector<Inequality>> levels(num_vars + 1);
    levels[num_vars] = current;
    for (int v = num_vars - 1; v >= 0; --v) {
        std::vector<Inequality> lower, upper, rest;
        for (const auto& c : levels[v + 1]) {
            if (c.coeffs[v] > 0)
                lower.push_back(c);
            else if (c.coeffs[v] < 0)
                upper.push_back(c);
            else
                rest.push_back(c);
        }
        std::set<std::string> seen;
        std::vector<Inequality> next;
        auto push_unique = [&](Inequality ineq) {
            std::string key = constraint_key(ineq.coeffs, ineq.rhs);
            if (seen.insert(key).second) next.push_back(std::move(ineq));
        };
        for (const auto& c : rest) push_unique(c);
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                // lo: a u_v + ... >= p  (a > 0);  up: -b u_v + ... >= q  (b > 0)
                Rational a = lo.coeffs[v];
                Rational b = -up.coeffs[v];
                Inequality combined;
                combined.coeffs.assign(num_vars, Rational(0));
                for (int j = 0; j < num_vars; ++j)
                    combined.coeffs[j] = lo.coeffs[j] * b + up.coeffs[j] * a;
                combined.coeffs[v] = 0;
                combined.rhs = lo.rhs * b + up.rhs * a;
                push_unique(std::move(combined));
            }
        }
        result.trace.push_back("eliminate u" + std::to_string(v + 1) + ": " +
                               std::to_string(lower.size()) + " lower, " +
                               std::to_string(upper.size()) + " upper, " +
                               std::to_string(rest.size()) + " untouched -> " +
                               std::to_string(next.size()) + " constraints");
        levels[v] = std::move(next);
    }

    for (const auto& c : levels[0]) {
        if (c.rhs > 0) { // 0 >= rhs fails
            result.feasible = false;
            result.trace.push_back("contradiction: 0 >= " + c.rhs.get_str());
            return result;
        }
    }

    // Back-substitute a witness, variable by variable.
    std::vector<Rational> x(num_vars, Rational(0));
    for (int v = 0; v < num_vars; ++v) {
        bool has_lo = false, has_up = false;
        Rational lo, up;
        for (const auto& c : levels[v + 1]) {
            if (c.coeffs[v] == 0) continue;
            Rational bound = c.rhs;
            for (int j = 0; j < v; ++j) bound -= c.coeffs[j] * x[j];
            bound /= c.coeffs[v];
            if (c.coeffs[v] > 0) {
                if (!has_lo || bound > lo) lo = bound, has_lo = true;
            } else {
                if (!has_up || bound < up) up = bound, has_up = true;
            }
        }
        if (has_lo && has_up)
            x[v] = (lo + up) / 2;
        else if (has_lo)
            x[v] = lo;
        else if (has_up)
            x[v] = up;
        else
            x[v] = 0;
    }

    // Verify before returning.
    for (const auto& c : constraints) {
        Rational lhs = 0;
        for (int j = 0; j < num_vars; ++j) lhs += c.coeffs[j] * x[j];
        bool ok = c.is_equality ? lhs == c.rhs : lhs >= c.rhs;
        if (!ok)
            throw std::logic_error("Fourier-Motzkin witness failed verification");
    }
    result.feasible = true;
    result.witness = std::move(x);
    return result;
}

FeasibilityResult feasible(const KurodaSystem& system) {
    return feasible(system.constraints, system.num_vars);
}

KurodaVerdict kuroda_verdict(const ExponentData& data) {
    KurodaVerdict verdict;
    verdict.systems = build_systems(data);
    verdict.satisfied = true;
    for (const auto& sys : verdict.systems) {
        verdict.results.push_back(feasible(sys));
        if (!verdict.results.back().feasible && verdict.satisfied) {
            verdict.satisfied = false;
            verdict.failing_k = sys.k;
        }
    }
    return verdict;
}

} // namespace lnd
