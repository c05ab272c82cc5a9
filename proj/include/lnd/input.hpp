#pragma once

#include <map>
#include <string>
#include <vector>

#include "lnd/dmodule.hpp"

namespace lnd {

// Parsed contents of a definition file:
//   ring B = Q[x, y]
//   derivation D on B { x -> 0; y -> x }
//   module M on D { basis e1, e2; d e1 -> 0; d e2 -> x*e1; relations: y*e2; }
// '#' starts a line comment.
struct InputDefinitions {
    std::vector<std::string> ring_order;
    std::map<std::string, Ring> rings;
    std::vector<std::string> derivation_order;
    std::map<std::string, Derivation> derivations;
    std::vector<std::string> module_order;
    std::map<std::string, DeltaModule> modules;
};

InputDefinitions parse_definitions(const std::string& text);
InputDefinitions parse_definitions_file(const std::string& path);

// Module expression over the ring extended by the basis names; every monomial
// must be linear in the basis part.
ModuleElement parse_module_element(const std::string& text, const Ring& base,
                                   const std::vector<std::string>& basis);
std::vector<ModuleElement> parse_module_element_list(const std::string& text, const Ring& base,
                                                     const std::vector<std::string>& basis);

} // namespace lnd
