#include "lnd/dmodule.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

#include "lnd/echelon.hpp"
#include "lnd/matrix.hpp"

namespace lnd {

namespace {

// delta_M on the free presentation, before any quotient reduction.
ModuleElement apply_free(const Derivation& base, const std::vector<std::vector<Polynomial>>& conn,
                         const ModuleElement& z) {
    int p = static_cast<int>(conn.size());
    ModuleElement out = zero_element(base.ring(), p);
    for (int i = 0; i < p; ++i) {
        out[i] = base.apply(z[i]);
        for (int j = 0; j < p; ++j)
            if (!conn[i][j].is_zero() && !z[j].is_zero()) out[i] = out[i] + conn[i][j] * z[j];
    }
    return out;
}

// Greedy witness order making the connection strictly triangular.
std::optional<std::vector<int>> triangular_basis_order(
    const std::vector<std::vector<Polynomial>>& conn) {
    int p = static_cast<int>(conn.size());
    std::vector<bool> placed(p, false);
    std::vector<int> order;
    for (int step = 0; step < p; ++step) {
        int found = -1;
        for (int j = 0; j < p && found < 0; ++j) {
            if (placed[j]) continue;
            bool ok = conn[j][j].is_zero();
            for (int i = 0; i < p && ok; ++i)
                if (i != j && !conn[i][j].is_zero() && !placed[i]) ok = false;
            if (ok) found = j;
        }
        if (found < 0) return std::nullopt;
        placed[found] = true;
        order.push_back(found);
    }
    return order;
}

} // namespace

DeltaModule::DeltaModule(Derivation base, std::vector<std::string> basis,
                         std::vector<std::vector<Polynomial>> connection,
                         std::vector<ModuleElement> relations, int cap)
    : base_(std::move(base)),
      basis_(std::move(basis)),
      connection_(std::move(connection)),
      relations_(std::move(relations)) {
    int p = rank();
    if (p == 0) throw DomainError("module needs at least one basis element");
    {
        std::vector<std::string> seen;
        for (const auto& name : basis_) {
            if (name.empty() || std::find(seen.begin(), seen.end(), name) != seen.end())
                throw DomainError("module basis names must be distinct and nonempty");
            seen.push_back(name);
        }
    }
    if (static_cast<int>(connection_.size()) != p)
        throw DomainError("connection matrix must be rank x rank");
    for (const auto& row : connection_) {
        if (static_cast<int>(row.size()) != p)
            throw DomainError("connection matrix must be rank x rank");
        for (const auto& e : row)
            if (!same_ring(e.ring(), ring()))
                throw DomainError("connection entry lives in a different ring");
    }
    for (const auto& r : relations_) {
        if (static_cast<int>(r.size()) != p)
            throw DomainError("relation rank mismatch");
        for (const auto& c : r)
            if (!same_ring(c.ring(), ring()))
                throw DomainError("relation component lives in a different ring");
    }

    if (!relations_.empty()) {
        relations_gb_ = buchberger_module(relations_, TermOrder::Grevlex, p);
        // Well-definedness on the quotient: delta_M maps relations into the
        // relation submodule.
        for (const auto& r : relations_) {
            ModuleElement img = apply_free(base_, connection_, r);
            if (!me_is_zero(lnd::normal_form(img, relations_gb_)))
                throw DomainError("module derivation is not well-defined on the quotient: "
                                  "delta_M of a relation is not in the relation submodule");
        }
    }

    // Condition (2): strictly triangular connection under some basis order,
    // otherwise verified per basis element within the cap.
    if (!triangular_basis_order(connection_)) {
        for (int j = 0; j < p; ++j) {
            ModuleElement z = zero_element(ring(), p);
            z[j] = Polynomial::constant(ring(), Rational(1));
            int steps = 0;
            while (!me_is_zero(z)) {
                if (++steps > cap)
                    throw DomainError("module connection is not nilpotentizable: condition (2) "
                                      "fails structurally and within the iteration cap");
                z = apply_free(base_, connection_, z);
                if (!relations_.empty()) z = lnd::normal_form(z, relations_gb_);
            }
        }
    }
}

ModuleElement DeltaModule::normal_form(const ModuleElement& z) const {
    if (relations_.empty()) return z;
    return lnd::normal_form(z, relations_gb_);
}

ModuleElement apply_module(const DeltaModule& m, const ModuleElement& z) {
    if (static_cast<int>(z.size()) != m.rank())
        throw DomainError("module element rank mismatch");
    for (const auto& c : z)
        if (!same_ring(c.ring(), m.ring()))
            throw DomainError("module element lives in a different ring");
    return m.normal_form(apply_free(m.base(), m.connection(), z));
}

DeltaModule omega(const Derivation& d) {
    const Ring& ring = d.ring();
    int n = ring->arity();
    std::vector<std::string> basis;
    basis.reserve(n);
    for (int i = 0; i < n; ++i) basis.push_back("d" + ring->variable(i));
    std::vector<std::vector<Polynomial>> conn(n, std::vector<Polynomial>());
    for (int i = 0; i < n; ++i) {
        conn[i].reserve(n);
        for (int j = 0; j < n; ++j) conn[i].push_back(d.image(j).partial_derivative(i));
    }
    return DeltaModule(d, std::move(basis), std::move(conn), {});
}

ModuleElement differential(const Polynomial& f) {
    int n = f.ring()->arity();
    ModuleElement df;
    df.reserve(n);
    for (int i = 0; i < n; ++i) df.push_back(f.partial_derivative(i));
    return df;
}

namespace {

void require_same_base(const DeltaModule& m, const DeltaModule& n) {
    if (!(m.base() == n.base()))
        throw DomainError("modules have different base derivations");
}

void require_free(const DeltaModule& m, const char* what) {
    if (!m.is_free())
        throw DomainError(std::string(what) + " requires a free module");
}

} // namespace

DeltaModule tensor(const DeltaModule& m, const DeltaModule& n) {
    require_free(m, "tensor");
    require_free(n, "tensor");
    require_same_base(m, n);
    int p = m.rank(), q = n.rank();
    const Ring& ring = m.ring();
    std::vector<std::string> basis;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) basis.push_back(m.basis()[i] + "(x)" + n.basis()[j]);
    auto flat = [q](int i, int j) { return i * q + j; };
    std::vector<std::vector<Polynomial>> conn(
        p * q, std::vector<Polynomial>(p * q, Polynomial::zero(ring)));
    // delta(e_i (x) f_j) = delta_M(e_i) (x) f_j + e_i (x) delta_N(f_j)
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            for (int a = 0; a < p; ++a)
                if (!m.connection()[a][i].is_zero())
                    conn[flat(a, j)][flat(i, j)] = conn[flat(a, j)][flat(i, j)] + m.connection()[a][i];
            for (int b = 0; b < q; ++b)
                if (!n.connection()[b][j].is_zero())
                    conn[flat(i, b)][flat(i, j)] = conn[flat(i, b)][flat(i, j)] + n.connection()[b][j];
        }
    return DeltaModule(m.base(), std::move(basis), std::move(conn), {});
}

DeltaModule hom(const DeltaModule& m, const DeltaModule& n) {
    require_free(m, "hom");
    require_free(n, "hom");
    require_same_base(m, n);
    int p = m.rank(), q = n.rank();
    const Ring& ring = m.ring();
    // Basis H_i_j : e_j -> f_i; delta_Hom(F) = delta o F - F o delta, i.e.
    // entrywise delta(F) + D F - F C on q x p matrices.
    std::vector<std::string> basis;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j)
            basis.push_back("H_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    auto flat = [p](int i, int j) { return i * p + j; };
    std::vector<std::vector<Polynomial>> conn(
        q * p, std::vector<Polynomial>(q * p, Polynomial::zero(ring)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) {
            for (int a = 0; a < q; ++a)
                if (!n.connection()[a][i].is_zero())
                    conn[flat(a, j)][flat(i, j)] = conn[flat(a, j)][flat(i, j)] + n.connection()[a][i];
            for (int b = 0; b < p; ++b)
                if (!m.connection()[j][b].is_zero())
                    conn[flat(i, b)][flat(i, j)] = conn[flat(i, b)][flat(i, j)] - m.connection()[j][b];
        }
    return DeltaModule(m.base(), std::move(basis), std::move(conn), {});
}

Derivation sym_extend(const DeltaModule& m) {
    require_free(m, "sym_extend");
    Ring ext = extend_ring(m.ring(), m.basis());
    int n = m.ring()->arity(), p = m.rank();
    std::vector<Polynomial> images;
    images.reserve(n + p);
    for (int i = 0; i < n; ++i) images.push_back(m.base().image(i).rename_into(ext));
    for (int j = 0; j < p; ++j) {
        Polynomial img = Polynomial::zero(ext);
        for (int i = 0; i < p; ++i) {
            if (m.connection()[i][j].is_zero()) continue;
            img = img + m.connection()[i][j].rename_into(ext) *
                            Polynomial::variable(ext, n + i);
        }
        images.push_back(std::move(img));
    }
    return Derivation(ext, std::move(images));
}

ModuleWeights infer_basis_weights(const DeltaModule& m, const WeightSystem& ws) {
    int p = m.rank();
    int g = ws.num_rows();
    ModuleWeights mw;
    mw.rows.assign(g, std::vector<long long>(p, 0));

    for (int r = 0; r < g; ++r) {
        auto row_weight = [&](const Monomial& mono) {
            long long w = 0;
            for (size_t i = 0; i < mono.size(); ++i) w += ws.rows[r][i] * mono[i];
            return w;
        };
        // Difference constraints beta_j - beta_i = value, from the connection
        // and from relations; solved per connected component with the lowest
        // index normalized to zero.
        std::vector<std::vector<std::pair<int, long long>>> adj(p);
        auto add_edge = [&](int i, int j, long long diff) { // beta_j - beta_i = diff
            adj[i].push_back({j, diff});
            adj[j].push_back({i, -diff});
        };
        for (int j = 0; j < p; ++j) {
            for (int i = 0; i < p; ++i) {
                const Polynomial& c = m.connection()[i][j];
                if (c.is_zero()) continue;
                std::optional<long long> value;
                for (const auto& [mono, coef] : c.terms()) {
                    long long v = row_weight(mono) - ws.shift[r];
                    if (!value)
                        value = v;
                    else if (*value != v)
                        throw DomainError("module connection is not homogeneous under the "
                                          "weight system");
                }
                add_edge(i, j, *value);
            }
        }
        for (const auto& rel : m.relations()) {
            int anchor = -1;
            long long anchor_w = 0;
            for (int i = 0; i < p; ++i) {
                if (rel[i].is_zero()) continue;
                std::optional<long long> value;
                for (const auto& [mono, coef] : rel[i].terms()) {
                    long long v = row_weight(mono);
                    if (!value)
                        value = v;
                    else if (*value != v)
                        throw DomainError("module relation is not homogeneous under the "
                                          "weight system");
                }
                if (anchor < 0) {
                    anchor = i;
                    anchor_w = *value;
                } else {
                    // w(rel_i) + beta_i = w(rel_anchor) + beta_anchor
                    add_edge(anchor, i, anchor_w - *value);
                }
            }
        }

        std::vector<bool> assigned(p, false);
        for (int start = 0; start < p; ++start) {
            if (assigned[start]) continue;
            assigned[start] = true;
            mw.rows[r][start] = 0;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (const auto& [v, diff] : adj[u]) {
                    long long bv = mw.rows[r][u] + diff;
                    if (!assigned[v]) {
                        assigned[v] = true;
                        mw.rows[r][v] = bv;
                        stack.push_back(v);
                    } else if (mw.rows[r][v] != bv) {
                        throw DomainError("module weights are inconsistent: no homogeneous "
                                          "basis grading exists");
                    }
                }
            }
        }
    }
    return mw;
}

namespace {

Weight module_weight(const Monomial& mono, int basis_index, const WeightSystem& ws,
                     const ModuleWeights& mw) {
    Weight w = weight_of(mono, ws);
    for (int r = 0; r < ws.num_rows(); ++r) w[r] += mw.rows[r][basis_index];
    return w;
}

bool is_standard(const DeltaModule& m, const Monomial& mono, int basis_index) {
    const ModuleGroebnerBasis* gb = m.relations_gb();
    if (!gb) return true;
    for (const auto& g : gb->generators) {
        // leading component under POT = first nonzero position
        for (int pos = 0; pos < static_cast<int>(g.size()); ++pos) {
            if (g[pos].is_zero()) continue;
            if (pos == basis_index && divides(g[pos].leading_term()->first, mono)) return false;
            break;
        }
    }
    return true;
}

} // namespace

std::vector<std::pair<Monomial, int>> module_graded_piece(const DeltaModule& m,
                                                          const WeightSystem& ws,
                                                          const ModuleWeights& mw,
                                                          const Weight& target) {
    std::vector<std::pair<Monomial, int>> out;
    for (int j = 0; j < m.rank(); ++j) {
        Weight ring_target = target;
        for (int r = 0; r < ws.num_rows(); ++r) ring_target[r] -= mw.rows[r][j];
        for (const Monomial& mono : graded_piece(m.ring(), ws, ring_target))
            if (is_standard(m, mono, j)) out.push_back({mono, j});
    }
    return out;
}

namespace {

std::vector<Rational> module_coordinates(const ModuleElement& z,
                                         const std::map<std::pair<int, Monomial>, int>& index) {
    std::vector<Rational> v(index.size(), Rational(0));
    for (int i = 0; i < static_cast<int>(z.size()); ++i) {
        for (const auto& [mono, c] : z[i].terms()) {
            auto it = index.find({i, mono});
            if (it == index.end())
                throw std::logic_error("module element leaves its graded piece");
            v[it->second] = c;
        }
    }
    return v;
}

std::map<std::pair<int, Monomial>, int> piece_index(
    const std::vector<std::pair<Monomial, int>>& piece) {
    std::map<std::pair<int, Monomial>, int> index;
    for (size_t i = 0; i < piece.size(); ++i)
        index.emplace(std::make_pair(piece[i].second, piece[i].first), static_cast<int>(i));
    return index;
}

std::vector<ModuleElement> module_kernel_on_piece(const DeltaModule& m, const WeightSystem& ws,
                                                  const ModuleWeights& mw, const Weight& target,
                                                  const std::vector<std::pair<Monomial, int>>& piece) {
    if (piece.empty()) return {};
    Weight image_weight = target;
    for (int r = 0; r < ws.num_rows(); ++r) image_weight[r] += ws.shift[r];
    auto image = module_graded_piece(m, ws, mw, image_weight);
    auto image_idx = piece_index(image);

    RationalMatrix mat(static_cast<int>(image.size()), static_cast<int>(piece.size()));
    for (size_t j = 0; j < piece.size(); ++j) {
        ModuleElement z = zero_element(m.ring(), m.rank());
        z[piece[j].second] = Polynomial::monomial(m.ring(), piece[j].first, Rational(1));
        ModuleElement img = apply_module(m, z);
        std::vector<Rational> col = module_coordinates(img, image_idx);
        for (size_t i = 0; i < col.size(); ++i)
            if (col[i] != 0) mat.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }

    std::vector<ModuleElement> basis;
    for (const auto& v : nullspace(mat)) {
        ModuleElement z = zero_element(m.ring(), m.rank());
        for (size_t j = 0; j < piece.size(); ++j)
            if (v[j] != 0) z[piece[j].second].add_term(piece[j].first, v[j]);
        basis.push_back(std::move(z));
    }
    return basis;
}

} // namespace

std::vector<ModuleElement> module_kernel_basis(const DeltaModule& m, const WeightSystem& ws,
                                               const ModuleWeights& mw, const Weight& target) {
    return module_kernel_on_piece(m, ws, mw, target, module_graded_piece(m, ws, mw, target));
}

std::vector<ModuleElement> module_kernel_basis(const DeltaModule& m, const Weight& target) {
    WeightSystem ws = infer_weights(m.base());
    ModuleWeights mw = infer_basis_weights(m, ws);
    return module_kernel_basis(m, ws, mw, target);
}

namespace {

struct ModuleBucket {
    Weight weight;
    long long degree = 0;
    std::vector<std::pair<Monomial, int>> monomials;
};

ModulePieceReport solve_module_piece(const DeltaModule& m, const WeightSystem& ws,
                                     const ModuleWeights& mw, const ModuleBucket& bucket,
                                     const std::vector<GeneratorEntry>& ring_gens,
                                     const std::vector<ModuleGeneratorEntry>& gens,
                                     int piece_limit) {
    ModulePieceReport report;
    report.weight = bucket.weight;
    report.degree = bucket.degree;
    report.piece_dimension = static_cast<int>(bucket.monomials.size());
    if (report.piece_dimension > piece_limit) {
        report.skipped = true;
        return report;
    }
    report.basis = module_kernel_on_piece(m, ws, mw, bucket.weight, bucket.monomials);
    report.kernel_dimension = static_cast<int>(report.basis.size());
    if (report.basis.empty()) return report;

    auto index = piece_index(bucket.monomials);
    Echelon span;
    for (const auto& gen : gens) {
        Weight coeff_weight = bucket.weight;
        for (size_t r = 0; r < coeff_weight.size(); ++r) coeff_weight[r] -= gen.weight[r];
        for (const Polynomial& a :
             detail::generator_products(ring_gens, ws, coeff_weight, m.ring())) {
            ModuleElement z = m.normal_form(me_scale(gen.element, a));
            if (me_is_zero(z)) continue;
            span.add(module_coordinates(z, index));
        }
    }
    report.span_dimension = span.rank();
    for (const ModuleElement& z : report.basis)
        if (span.add(module_coordinates(z, index))) report.new_generators.push_back(z);
    return report;
}

} // namespace

ModuleKernelReport module_kernel_generators(const DeltaModule& m, const WeightSystem& ws,
                                            long long bound, const KernelOptions& options) {
    ModuleKernelReport report;
    report.bound = bound;
    report.weights = ws;
    report.basis_weights = infer_basis_weights(m, ws);
    report.ring_generator_bound = bound;
    GradedKernelReport ring_report = kernel_generators(m.base(), ws, bound, options);
    report.ring_generators = ring_report.generators;

    // Bucket all standard module monomials with positive degree <= bound.
    std::map<Weight, ModuleBucket> buckets;
    for (int j = 0; j < m.rank(); ++j) {
        long long offset = report.basis_weights.rows[ws.positive_row][j];
        long long ring_bound = bound - offset;
        if (ring_bound < 0) continue;
        for (const auto& rb : enumerate_buckets(m.ring(), ws, ring_bound)) {
            for (const Monomial& mono : rb.monomials) {
                if (!is_standard(m, mono, j)) continue;
                Weight w = module_weight(mono, j, ws, report.basis_weights);
                auto& bucket = buckets[w];
                bucket.weight = w;
                bucket.degree = w[ws.positive_row];
                bucket.monomials.push_back({mono, j});
            }
        }
    }
    std::vector<ModuleBucket> ordered;
    ordered.reserve(buckets.size());
    for (auto& [w, b] : buckets) {
        std::sort(b.monomials.begin(), b.monomials.end(),
                  [](const std::pair<Monomial, int>& a, const std::pair<Monomial, int>& c) {
                      if (a.second != c.second) return a.second < c.second;
                      return grevlex_greater(a.first, c.first);
                  });
        ordered.push_back(std::move(b));
    }
    std::sort(ordered.begin(), ordered.end(), [](const ModuleBucket& a, const ModuleBucket& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.weight < b.weight;
    });

    std::vector<ModuleGeneratorEntry> gens;
    size_t start = 0;
    while (start < ordered.size()) {
        size_t end = start;
        while (end < ordered.size() && ordered[end].degree == ordered[start].degree) ++end;
        int count = static_cast<int>(end - start);
        std::vector<ModulePieceReport> level(count);

        if (options.jobs > 1) {
            std::exception_ptr error;
#ifdef LND_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
#endif
            for (int i = 0; i < count; ++i) {
                try {
                    level[i] = solve_module_piece(m, ws, report.basis_weights, ordered[start + i],
                                                  report.ring_generators, gens, options.piece_limit);
                } catch (...) {
#ifdef LND_HAVE_OPENMP
#pragma omp critical
#endif
                    error = std::current_exception();
                }
            }
            if (error) std::rethrow_exception(error);
        } else {
            for (int i = 0; i < count; ++i)
                level[i] = solve_module_piece(m, ws, report.basis_weights, ordered[start + i],
                                              report.ring_generators, gens, options.piece_limit);
        }

        for (int i = 0; i < count; ++i) {
            for (const ModuleElement& z : level[i].new_generators)
                gens.push_back({level[i].weight, z});
            report.pieces.push_back(std::move(level[i]));
        }
        start = end;
    }

    report.generators = gens;
    return report;
}

DeltaSubmoduleCheck is_delta_submodule(const DeltaModule& m, const std::vector<ModuleElement>& gens) {
    require_free(m, "is_delta_submodule");
    ModuleGroebnerBasis gb = buchberger_module(gens, TermOrder::Grevlex, m.rank());
    for (const auto& z : gens) {
        ModuleElement img = apply_module(m, z);
        if (!member(img, gb)) return {false, std::make_pair(z, img)};
    }
    return {true, std::nullopt};
}

} // namespace lnd
