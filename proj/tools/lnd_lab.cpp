#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "lnd/catalog.hpp"
#include "lnd/input.hpp"
#include "lnd/parser.hpp"
#include "lnd/report.hpp"

using namespace lnd;

namespace {

struct CommonOptions {
    std::string example;
    std::vector<std::string> params;
    std::string input_file;
    std::string derivation_name;
    std::string module_name;
    std::string format = "text";
    int jobs = 1;
    int piece_limit = 20000;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--example", opt.example, "catalog id (see README for the list)");
    cmd->add_option("--param", opt.params, "catalog parameter, e.g. --param n=3");
    cmd->add_option("--input", opt.input_file, "definition file");
    cmd->add_option("--derivation", opt.derivation_name, "derivation name in the input file");
    cmd->add_option("--module", opt.module_name, "module name in the input file");
    cmd->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", opt.jobs, "worker threads for graded pieces")->check(CLI::Range(1, 64));
    cmd->add_option("--piece-limit", opt.piece_limit, "skip pieces with more monomials");
}

std::map<std::string, long long> parse_params(const std::vector<std::string>& params) {
    std::map<std::string, long long> out;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw ParseError("parameter must look like name=value: " + p);
        std::string name = p.substr(0, eq);
        std::string value = p.substr(eq + 1);
        try {
            out[name] = std::stoll(value);
        } catch (const std::exception&) {
            throw ParseError("parameter value is not an integer: " + p);
        }
    }
    return out;
}

// Resolved input: either a catalog entry or parsed definitions.
struct Input {
    std::optional<CatalogEntry> entry;
    std::optional<InputDefinitions> defs;
    Json descriptor;

    const Derivation& derivation(const CommonOptions& opt) const {
        if (entry) {
            if (entry->is_derivation()) return entry->derivation();
            if (entry->is_module()) return entry->module().base();
            throw DomainError("catalog entry '" + entry->id + "' is not a derivation");
        }
        const auto& defs_ = *defs;
        std::string name = opt.derivation_name;
        if (name.empty()) {
            if (defs_.derivation_order.size() != 1)
                throw DomainError("input file defines " +
                                  std::to_string(defs_.derivation_order.size()) +
                                  " derivations; select one with --derivation");
            name = defs_.derivation_order.front();
        }
        auto it = defs_.derivations.find(name);
        if (it == defs_.derivations.end()) throw DomainError("unknown derivation: " + name);
        return it->second;
    }

    const DeltaModule& module(const CommonOptions& opt, const std::string& override_name = "") const {
        if (entry) {
            if (!entry->is_module())
                throw DomainError("catalog entry '" + entry->id + "' is not a module");
            return entry->module();
        }
        const auto& defs_ = *defs;
        std::string name = !override_name.empty() ? override_name : opt.module_name;
        if (name.empty()) {
            if (defs_.module_order.size() != 1)
                throw DomainError("input file defines " + std::to_string(defs_.module_order.size()) +
                                  " modules; select one with --module");
            name = defs_.module_order.front();
        }
        auto it = defs_.modules.find(name);
        if (it == defs_.modules.end()) throw DomainError("unknown module: " + name);
        return it->second;
    }

    const ExponentData& exponent_data() const {
        if (!entry || !entry->is_exponent_data())
            throw DomainError("command requires exponent data (e.g. --example thm52data)");
        return entry->exponent_data();
    }
};

Input resolve_input(const CommonOptions& opt) {
    if (opt.example.empty() == opt.input_file.empty())
        throw DomainError("exactly one input source required: --example or --input");
    Input in;
    if (!opt.example.empty()) {
        auto params = parse_params(opt.params);
        in.entry = catalog_get(opt.example, params);
        Json jp = Json::object();
        for (const auto& [k, v] : params) jp[k] = v;
        in.descriptor = Json{{"example", opt.example}, {"params", jp}};
    } else {
        in.defs = parse_definitions_file(opt.input_file);
        in.descriptor = Json{{"file", opt.input_file}};
        if (!opt.derivation_name.empty()) in.descriptor["derivation"] = opt.derivation_name;
        if (!opt.module_name.empty()) in.descriptor["module"] = opt.module_name;
    }
    return in;
}

Weight parse_target(const std::string& text, int expected) {
    Weight w;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw ParseError("malformed target weight: " + text);
        w.push_back(std::stoll(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
            cur += c;
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw ParseError("malformed target weight: " + text);
    }
    flush();
    if (static_cast<int>(w.size()) != expected)
        throw DomainError("target weight has length " + std::to_string(w.size()) + ", expected " +
                          std::to_string(expected) + " (one per grading row)");
    return w;
}

Json derivation_json(const Derivation& d) {
    Json vars = Json::array();
    for (const auto& v : d.ring()->variables()) vars.push_back(v);
    Json images = Json::object();
    for (int i = 0; i < d.ring()->arity(); ++i)
        images[d.ring()->variable(i)] = d.image(i).to_string();
    return Json{{"variables", vars}, {"images", images}};
}

std::string derivation_text(const Derivation& d) {
    std::ostringstream out;
    out << "ring Q[";
    for (int i = 0; i < d.ring()->arity(); ++i)
        out << (i ? ", " : "") << d.ring()->variable(i);
    out << "]\n";
    for (int i = 0; i < d.ring()->arity(); ++i)
        out << "d(" << d.ring()->variable(i) << ") = " << d.image(i).to_string() << "\n";
    return out.str();
}

Json module_json(const DeltaModule& m) {
    Json basis = Json::array();
    for (const auto& b : m.basis()) basis.push_back(b);
    Json images = Json::object();
    for (int j = 0; j < m.rank(); ++j) {
        ModuleElement img(m.rank(), Polynomial::zero(m.ring()));
        for (int i = 0; i < m.rank(); ++i) img[i] = m.connection()[i][j];
        images[m.basis()[j]] = m.element_to_string(img);
    }
    Json rels = Json::array();
    for (const auto& r : m.relations()) rels.push_back(m.element_to_string(r));
    Json j{{"basis", basis}, {"images", images}, {"relations", rels}};
    j["base"] = derivation_json(m.base());
    return j;
}

std::string module_text(const DeltaModule& m) {
    std::ostringstream out;
    out << derivation_text(m.base());
    out << "basis: ";
    for (int j = 0; j < m.rank(); ++j) out << (j ? ", " : "") << m.basis()[j];
    out << "\n";
    for (int j = 0; j < m.rank(); ++j) {
        ModuleElement img(m.rank(), Polynomial::zero(m.ring()));
        for (int i = 0; i < m.rank(); ++i) img[i] = m.connection()[i][j];
        out << "d(" << m.basis()[j] << ") = " << m.element_to_string(img) << "\n";
    }
    for (const auto& r : m.relations()) out << "relation: " << m.element_to_string(r) << "\n";
    return out.str();
}

void emit(const CommonOptions& opt, const std::string& command, const Json& input,
          const Json& result, const std::string& text) {
    if (opt.format == "json")
        std::cout << render_json(report_envelope(command, input, result));
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lnd-lab: exact computations with locally nilpotent derivations and "
                 "delta-modules over Q"};
    app.require_subcommand(1);

    struct Cmd {
        CLI::App* app;
        CommonOptions opt;
        std::string poly, element, slice, u_prime, gens, ideal, target, left, right;
        long long max_weight = -1;
        int cap = kDefaultNilpotencyCap;
    };
    std::map<std::string, Cmd> cmds;
    auto make_cmd = [&](const std::string& name, const std::string& desc) -> Cmd& {
        Cmd& c = cmds[name];
        c.app = app.add_subcommand(name, desc);
        add_common(c.app, c.opt);
        return c;
    };

    {
        make_cmd("check-lnd", "triangularity check with witness variable order");
        auto& c = make_cmd("apply", "apply the derivation (or module derivation) once");
        c.app->add_option("--poly", c.poly, "polynomial argument");
        c.app->add_option("--element", c.element, "module element argument");
        auto& p = make_cmd("phi-t", "exponential map phi_t into B[t]");
        p.app->add_option("--poly", p.poly, "polynomial argument")->required();
        p.app->add_option("--cap", p.cap, "iteration cap");
        auto& n = make_cmd("nu", "delta-degree nu(f)");
        n.app->add_option("--poly", n.poly, "polynomial argument")->required();
        n.app->add_option("--cap", n.cap, "iteration cap");
        auto& s = make_cmd("slice-kernel", "kernel generators phi_{-u}(g) from a slice u");
        s.app->add_option("--slice", s.slice, "slice u with delta(u) = 1")->required();
        s.app->add_option("--gens", s.gens, "comma-separated generators (default: variables)");
        auto& l = make_cmd("local-slice-kernel",
                           "kernel generators over B[a^{-1}] from a local slice u'");
        l.app->add_option("--u-prime", l.u_prime, "local slice u' with delta(u') = a in ker")
            ->required();
        l.app->add_option("--gens", l.gens, "comma-separated generators (default: variables)");
        auto& k = make_cmd("kernel", "graded kernel truncation / basis at a target weight");
        k.app->add_option("--max-weight", k.max_weight, "positive-row degree bound");
        k.app->add_option("--target", k.target, "weight vector, e.g. 3,2,2,7");
        auto& mk = make_cmd("module-kernel", "graded M_0 truncation / basis at a target weight");
        mk.app->add_option("--max-weight", mk.max_weight, "positive-row degree bound");
        mk.app->add_option("--target", mk.target, "weight vector");
        make_cmd("omega", "Kaehler differential module of the derivation");
        make_cmd("sym-extend", "derivation on the symmetric algebra of a free module");
        auto& t = make_cmd("tensor", "tensor product of two free modules (default: with itself)");
        t.app->add_option("--left", t.left, "left module name (file input)");
        t.app->add_option("--right", t.right, "right module name (file input)");
        auto& h = make_cmd("hom", "Hom module of two free modules (default: with itself)");
        h.app->add_option("--left", h.left, "source module name (file input)");
        h.app->add_option("--right", h.right, "target module name (file input)");
        auto& di = make_cmd("delta-ideal-check", "is the ideal (or submodule) delta-stable?");
        di.app->add_option("--ideal", di.ideal, "comma-separated ideal generators");
        di.app->add_option("--gens", di.gens, "comma-separated module elements (module input)");
        make_cmd("kuroda", "Kuroda linear systems L_{k,r-2}, feasibility, verdict");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error(parse): " << e.what() << std::endl;
        return 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        Cmd& c = cmds.at(name);
        const CommonOptions& opt = c.opt;
        Input in = resolve_input(opt);

        if (name == "check-lnd") {
            const Derivation& d = in.derivation(opt);
            auto order = triangular_order(d);
            Json result{{"structural_lnd", order.has_value()}};
            std::ostringstream text;
            if (order) {
                Json w = Json::array();
                for (const auto& v : *order) w.push_back(v);
                result["witness_order"] = w;
                text << "locally nilpotent (structural): yes\nwitness order: ";
                for (size_t i = 0; i < order->size(); ++i) text << (i ? ", " : "") << (*order)[i];
                text << "\n";
            } else {
                text << "locally nilpotent (structural): no triangular order exists\n";
            }
            emit(opt, name, in.descriptor, result, text.str());
        } else if (name == "apply") {
            if (!c.poly.empty()) {
                const Derivation& d = in.derivation(opt);
                Polynomial f = parse_polynomial(c.poly, d.ring());
                Polynomial img = d.apply(f);
                emit(opt, name, in.descriptor, Json{{"result", img.to_string()}},
                     img.to_string() + "\n");
            } else if (!c.element.empty()) {
                const DeltaModule& m = in.module(opt);
                ModuleElement z = parse_module_element(c.element, m.ring(), m.basis());
                ModuleElement img = apply_module(m, z);
                emit(opt, name, in.descriptor, Json{{"result", m.element_to_string(img)}},
                     m.element_to_string(img) + "\n");
            } else {
                throw DomainError("apply needs --poly (derivation) or --element (module)");
            }
        } else if (name == "phi-t") {
            const Derivation& d = in.derivation(opt);
            Polynomial f = parse_polynomial(c.poly, d.ring());
            PhiT r = phi_t(d, f, c.cap);
            emit(opt, name, in.descriptor, Json{{"result", r.value.to_string()}},
                 r.value.to_string() + "\n");
        } else if (name == "nu") {
            const Derivation& d = in.derivation(opt);
            Polynomial f = parse_polynomial(c.poly, d.ring());
            DeltaDegree r = nu(d, f, c.cap);
            emit(opt, name, in.descriptor, Json{{"result", r.to_string()}}, r.to_string() + "\n");
        } else if (name == "slice-kernel" || name == "local-slice-kernel") {
            const Derivation& d = in.derivation(opt);
            std::vector<Polynomial> gens;
            if (!c.gens.empty()) {
                gens = parse_polynomial_list(c.gens, d.ring());
            } else {
                for (int i = 0; i < d.ring()->arity(); ++i)
                    gens.push_back(Polynomial::variable(d.ring(), i));
            }
            Json list = Json::array();
            std::ostringstream text;
            if (name == "slice-kernel") {
                Polynomial u = parse_polynomial(c.slice, d.ring());
                for (const auto& g : gens) {
                    Polynomial r = phi_minus_u(d, u, g, c.cap);
                    list.push_back(Json{{"generator", g.to_string()}, {"image", r.to_string()}});
                    text << "phi_{-u}(" << g.to_string() << ") = " << r.to_string() << "\n";
                }
            } else {
                Polynomial up = parse_polynomial(c.u_prime, d.ring());
                auto rs = local_slice_kernel(d, up, gens, c.cap);
                for (size_t i = 0; i < gens.size(); ++i) {
                    list.push_back(Json{{"generator", gens[i].to_string()},
                                        {"numerator", rs[i].numerator.to_string()},
                                        {"denominator_base", rs[i].denominator_base.to_string()},
                                        {"power", rs[i].power}});
                    text << gens[i].to_string() << " -> " << rs[i].to_string() << "\n";
                }
            }
            emit(opt, name, in.descriptor, Json{{"elements", list}}, text.str());
        } else if (name == "kernel") {
            const Derivation& d = in.derivation(opt);
            WeightSystem ws = infer_weights(d);
            if (!c.target.empty()) {
                Weight target = parse_target(c.target, ws.num_rows());
                auto basis = kernel_basis(d, ws, target);
                Json jb = Json::array();
                std::ostringstream text;
                text << "kernel basis at weight " << weight_to_string(target) << " ("
                     << basis.size() << " elements)\n";
                for (const auto& f : basis) {
                    jb.push_back(f.to_string());
                    text << "  " << f.to_string() << "\n";
                }
                emit(opt, name, in.descriptor,
                     Json{{"weight_system", weight_system_json(ws)},
                          {"weight", weight_json(target)},
                          {"basis", jb}},
                     text.str());
            } else {
                if (c.max_weight < 0) throw DomainError("kernel requires --max-weight or --target");
                KernelOptions kopt{opt.jobs, opt.piece_limit};
                auto report = kernel_generators(d, ws, c.max_weight, kopt);
                emit(opt, name, in.descriptor, kernel_report_json(report),
                     kernel_report_text(report));
            }
        } else if (name == "module-kernel") {
            const DeltaModule& m = in.module(opt);
            WeightSystem ws = infer_weights(m.base());
            if (!c.target.empty()) {
                ModuleWeights mw = infer_basis_weights(m, ws);
                Weight target = parse_target(c.target, ws.num_rows());
                auto basis = module_kernel_basis(m, ws, mw, target);
                Json jb = Json::array();
                std::ostringstream text;
                text << "module kernel basis at weight " << weight_to_string(target) << " ("
                     << basis.size() << " elements)\n";
                for (const auto& z : basis) {
                    jb.push_back(m.element_to_string(z));
                    text << "  " << m.element_to_string(z) << "\n";
                }
                emit(opt, name, in.descriptor,
                     Json{{"weight_system", weight_system_json(ws)},
                          {"weight", weight_json(target)},
                          {"basis", jb}},
                     text.str());
            } else {
                if (c.max_weight < 0)
                    throw DomainError("module-kernel requires --max-weight or --target");
                KernelOptions kopt{opt.jobs, opt.piece_limit};
                auto report = module_kernel_generators(m, ws, c.max_weight, kopt);
                emit(opt, name, in.descriptor, module_report_json(report, m),
                     module_report_text(report, m));
            }
        } else if (name == "omega") {
            const Derivation& d = in.derivation(opt);
            DeltaModule om = omega(d);
            emit(opt, name, in.descriptor, module_json(om), module_text(om));
        } else if (name == "sym-extend") {
            const DeltaModule& m = in.module(opt);
            Derivation ext = sym_extend(m);
            emit(opt, name, in.descriptor, derivation_json(ext), derivation_text(ext));
        } else if (name == "tensor" || name == "hom") {
            const DeltaModule& left = in.module(opt, c.left);
            const DeltaModule& right = in.module(opt, c.right.empty() ? c.left : c.right);
            DeltaModule r = name == "tensor" ? tensor(left, right) : hom(left, right);
            emit(opt, name, in.descriptor, module_json(r), module_text(r));
        } else if (name == "delta-ideal-check") {
            if (!c.ideal.empty()) {
                const Derivation& d = in.derivation(opt);
                auto gens = parse_polynomial_list(c.ideal, d.ring());
                auto check = is_delta_ideal(d, gens);
                Json result{{"is_delta_ideal", check.holds}};
                std::ostringstream text;
                if (check.holds) {
                    text << "delta-ideal: true\n";
                } else {
                    result["witness"] = Json{{"generator", check.witness->first.to_string()},
                                             {"image", check.witness->second.to_string()}};
                    text << "delta-ideal: false\nwitness: delta(" << check.witness->first.to_string()
                         << ") = " << check.witness->second.to_string() << " is not a member\n";
                }
                emit(opt, name, in.descriptor, result, text.str());
            } else if (!c.gens.empty()) {
                const DeltaModule& m = in.module(opt);
                auto gens = parse_module_element_list(c.gens, m.ring(), m.basis());
                auto check = is_delta_submodule(m, gens);
                Json result{{"is_delta_submodule", check.holds}};
                std::ostringstream text;
                if (check.holds) {
                    text << "delta-submodule: true\n";
                } else {
                    result["witness"] =
                        Json{{"generator", m.element_to_string(check.witness->first)},
                             {"image", m.element_to_string(check.witness->second)}};
                    text << "delta-submodule: false\nwitness: delta_M("
                         << m.element_to_string(check.witness->first) << ") = "
                         << m.element_to_string(check.witness->second) << " is not a member\n";
                }
                emit(opt, name, in.descriptor, result, text.str());
            } else {
                throw DomainError("delta-ideal-check needs --ideal (derivation) or --gens (module)");
            }
        } else if (name == "kuroda") {
            const ExponentData& data = in.exponent_data();
            KurodaVerdict verdict = kuroda_verdict(data);
            emit(opt, name, in.descriptor, kuroda_json(verdict), kuroda_text(verdict));
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error(parse): " << e.what() << std::endl;
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error(domain): " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error(internal): " << e.what() << std::endl;
        return 1;
    }
}
