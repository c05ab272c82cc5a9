#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lnd/dmodule.hpp"
#include "lnd/kuroda.hpp"

namespace lnd {

// Named derivations, modules, and exponent datasets, keyed by stable ids:
//   roberts(n,t)   7+-variable derivation with delta(y_{n+1}) = (x_1..x_n)^t
//   thm52(n)       rank-2 module over delta(y_i) = x_i^2
//   cor63(n,t)     the 4n+2 variable extension of omega(roberts)
//   freudenburg6   dimension-6 derivation
//   df5            dimension-5 derivation
//   ex33           delta(x)=0, delta(y)=x on Q[x,y]
//   lem42          B/x^2B as a rank-1 quotient module
//   lem43(q)       rank-2 quotient module with f = x^q
//   lem44(n)       Q[x,y,z] with delta(z) = y^n
//   thm52data(n)   exponent data feeding the Kuroda criterion
struct CatalogEntry {
    std::string id;
    std::map<std::string, long long> params;
    std::variant<ExponentData, Derivation, DeltaModule> payload;

    bool is_derivation() const { return std::holds_alternative<Derivation>(payload); }
    bool is_module() const { return std::holds_alternative<DeltaModule>(payload); }
    bool is_exponent_data() const { return std::holds_alternative<ExponentData>(payload); }
    const Derivation& derivation() const { return std::get<Derivation>(payload); }
    const DeltaModule& module() const { return std::get<DeltaModule>(payload); }
    const ExponentData& exponent_data() const { return std::get<ExponentData>(payload); }
};

CatalogEntry catalog_get(const std::string& id, const std::map<std::string, long long>& params);

// Known ids with their parameter names, for help text.
std::vector<std::pair<std::string, std::string>> catalog_ids();

} // namespace lnd
