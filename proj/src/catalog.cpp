#include "lnd/catalog.hpp"

#include <set>

namespace lnd {

namespace {

long long require_param(const std::map<std::string, long long>& params, const std::string& name,
                        const std::string& id, long long min_value) {
    auto it = params.find(name);
    if (it == params.end())
        throw DomainError(id + ": missing parameter " + name);
    if (it->second < min_value)
        throw DomainError(id + ": " + name + " >= " + std::to_string(min_value) + " required");
    return it->second;
}

void require_only(const std::map<std::string, long long>& params,
                  const std::set<std::string>& allowed, const std::string& id) {
    for (const auto& [k, v] : params)
        if (!allowed.count(k))
            throw DomainError(id + ": unexpected parameter " + k);
}

std::vector<std::string> indexed(const std::string& stem, int from, int to) {
    std::vector<std::string> names;
    for (int i = from; i <= to; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

Polynomial product_of_vars(const Ring& ring, int from, int to, int power) {
    Monomial m(ring->arity(), 0);
    for (int i = from; i <= to; ++i) m[i] = power;
    return Polynomial::monomial(ring, m, Rational(1));
}

Derivation make_roberts(int n, int t) {
    std::vector<std::string> vars = indexed("x", 1, n);
    for (const auto& v : indexed("y", 1, n + 1)) vars.push_back(v);
    Ring ring = make_ring(vars);
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) images.push_back(Polynomial::zero(ring));
    for (int i = 0; i < n; ++i) {
        Monomial m(ring->arity(), 0);
        m[i] = t + 1;
        images.push_back(Polynomial::monomial(ring, m, Rational(1)));
    }
    images.push_back(product_of_vars(ring, 0, n - 1, t));
    return Derivation(ring, images);
}

Derivation make_thm52_base(int n) {
    std::vector<std::string> vars = indexed("x", 1, n);
    for (const auto& v : indexed("y", 1, n)) vars.push_back(v);
    Ring ring = make_ring(vars);
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) images.push_back(Polynomial::zero(ring));
    for (int i = 0; i < n; ++i) {
        Monomial m(ring->arity(), 0);
        m[i] = 2;
        images.push_back(Polynomial::monomial(ring, m, Rational(1)));
    }
    return Derivation(ring, images);
}

DeltaModule make_thm52_module(int n) {
    Derivation base = make_thm52_base(n);
    const Ring& ring = base.ring();
    std::vector<std::vector<Polynomial>> conn(2, std::vector<Polynomial>(2, Polynomial::zero(ring)));
    conn[0][1] = product_of_vars(ring, 0, n - 1, 1); // delta_M(e2) = x_1..x_n e_1
    return DeltaModule(base, {"e1", "e2"}, conn, {});
}

Derivation make_cor63(int n, int t) {
    std::vector<std::string> vars = indexed("x", 1, n);
    for (const auto& v : indexed("y", 1, n + 1)) vars.push_back(v);
    for (const auto& v : indexed("w", 1, n)) vars.push_back(v);
    for (const auto& v : indexed("z", 1, n + 1)) vars.push_back(v);
    Ring ring = make_ring(vars);
    int xi = 0, yi = n, wi = 2 * n + 1, zi = 3 * n + 1;
    auto zero = Polynomial::zero(ring);
    std::vector<Polynomial> images(ring->arity(), zero);
    for (int i = 0; i < n; ++i) {
        Monomial m(ring->arity(), 0);
        m[xi + i] = t + 1;
        images[yi + i] = Polynomial::monomial(ring, m, Rational(1));
    }
    images[yi + n] = product_of_vars(ring, xi, xi + n - 1, t);
    for (int i = 0; i < n; ++i) {
        Monomial m(ring->arity(), 0);
        m[xi + i] = t;
        m[wi + i] = 1;
        images[zi + i] = Polynomial::monomial(ring, m, Rational(t + 1));
    }
    Polynomial zlast = zero;
    for (int i = 0; i < n; ++i) {
        Monomial m(ring->arity(), 0);
        for (int j = 0; j < n; ++j) m[xi + j] = (j == i) ? t - 1 : t;
        m[wi + i] = 1;
        zlast = zlast + Polynomial::monomial(ring, m, Rational(t));
    }
    images[zi + n] = zlast;
    return Derivation(ring, images);
}

Derivation make_freudenburg6() {
    Ring ring = make_ring({"x", "y", "s", "t", "u", "v"});
    auto var = [&](const std::string& name) { return Polynomial::variable(ring, name); };
    std::vector<Polynomial> images;
    images.push_back(Polynomial::zero(ring));                 // x
    images.push_back(Polynomial::zero(ring));                 // y
    images.push_back(var("x").pow(3));                        // s -> x^3
    images.push_back(var("y").pow(3) * var("s"));             // t -> y^3 s
    images.push_back(var("y").pow(3) * var("t"));             // u -> y^3 t
    images.push_back(var("x").pow(2) * var("y").pow(2));      // v -> x^2 y^2
    return Derivation(ring, images);
}

Derivation make_df5() {
    Ring ring = make_ring({"x", "s", "t", "u", "v"});
    auto var = [&](const std::string& name) { return Polynomial::variable(ring, name); };
    std::vector<Polynomial> images;
    images.push_back(Polynomial::zero(ring)); // x
    images.push_back(var("x").pow(3));        // s -> x^3
    images.push_back(var("s"));               // t -> s
    images.push_back(var("t"));               // u -> t
    images.push_back(var("x").pow(2));        // v -> x^2
    return Derivation(ring, images);
}

Derivation make_ex33() {
    Ring ring = make_ring({"x", "y"});
    return Derivation(ring, {Polynomial::zero(ring), Polynomial::variable(ring, 0)});
}

DeltaModule make_lem42() {
    Derivation base = make_ex33();
    const Ring& ring = base.ring();
    std::vector<std::vector<Polynomial>> conn(1, std::vector<Polynomial>(1, Polynomial::zero(ring)));
    ModuleElement rel{Polynomial::variable(ring, 0).pow(2)}; // x^2 e
    return DeltaModule(base, {"e"}, conn, {rel});
}

DeltaModule make_lem43(int q) {
    Ring ring = make_ring({"x", "y"});
    Polynomial x = Polynomial::variable(ring, 0);
    Polynomial f = x.pow(q);
    Derivation base(ring, {Polynomial::zero(ring), f});
    std::vector<std::vector<Polynomial>> conn(2, std::vector<Polynomial>(2, Polynomial::zero(ring)));
    conn[0][1] = Polynomial::constant(ring, Rational(1)); // delta_M(e2) = e1
    Polynomial y = Polynomial::variable(ring, 1);
    Polynomial zero = Polynomial::zero(ring);
    std::vector<ModuleElement> rels{
        {zero, y},   // y e2
        {y, f},      // y e1 + f e2
        {f, zero},   // f e1
    };
    return DeltaModule(base, {"e1", "e2"}, conn, rels);
}

Derivation make_lem44(int n) {
    Ring ring = make_ring({"x", "y", "z"});
    return Derivation(ring, {Polynomial::zero(ring), Polynomial::variable(ring, 0),
                             Polynomial::variable(ring, 1).pow(n)});
}

ExponentData make_thm52_data(int n) {
    ExponentData data;
    data.m = n + 1;
    data.r = n + 1;
    for (int j = 0; j < n; ++j) {
        std::vector<long long> v(n + 1, 0);
        v[j] = 2;
        data.delta.push_back(std::move(v));
    }
    data.delta.push_back(std::vector<long long>(n + 1, 1));
    validate_exponent_data(data);
    return data;
}

} // namespace

CatalogEntry catalog_get(const std::string& id, const std::map<std::string, long long>& params) {
    CatalogEntry entry;
    entry.id = id;
    entry.params = params;
    if (id == "roberts") {
        require_only(params, {"n", "t"}, id);
        int n = static_cast<int>(require_param(params, "n", id, 3));
        int t = static_cast<int>(require_param(params, "t", id, 2));
        entry.payload = make_roberts(n, t);
    } else if (id == "thm52") {
        require_only(params, {"n"}, id);
        int n = static_cast<int>(require_param(params, "n", id, 4));
        entry.payload = make_thm52_module(n);
    } else if (id == "cor63") {
        require_only(params, {"n", "t"}, id);
        int n = static_cast<int>(require_param(params, "n", id, 3));
        int t = static_cast<int>(require_param(params, "t", id, 2));
        entry.payload = make_cor63(n, t);
    } else if (id == "freudenburg6") {
        require_only(params, {}, id);
        entry.payload = make_freudenburg6();
    } else if (id == "df5") {
        require_only(params, {}, id);
        entry.payload = make_df5();
    } else if (id == "ex33") {
        require_only(params, {}, id);
        entry.payload = make_ex33();
    } else if (id == "lem42") {
        require_only(params, {}, id);
        entry.payload = make_lem42();
    } else if (id == "lem43") {
        require_only(params, {"q"}, id);
        int q = static_cast<int>(require_param(params, "q", id, 1));
        entry.payload = make_lem43(q);
    } else if (id == "lem44") {
        require_only(params, {"n"}, id);
        int n = static_cast<int>(require_param(params, "n", id, 1));
        entry.payload = make_lem44(n);
    } else if (id == "thm52data") {
        require_only(params, {"n"}, id);
        int n = static_cast<int>(require_param(params, "n", id, 4));
        entry.payload = make_thm52_data(n);
    } else {
        throw DomainError("unknown catalog id: " + id);
    }
    return entry;
}

std::vector<std::pair<std::string, std::string>> catalog_ids() {
    return {
        {"roberts", "n>=3, t>=2"},
        {"thm52", "n>=4"},
        {"cor63", "n>=3, t>=2"},
        {"freudenburg6", ""},
        {"df5", ""},
        {"ex33", ""},
        {"lem42", ""},
        {"lem43", "q>=1"},
        {"lem44", "n>=1"},
        {"thm52data", "n>=4"},
    };
}

} // namespace lnd
