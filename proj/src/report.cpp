#include "lnd/report.hpp"

#include <sstream>

namespace lnd {

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (long long v : w) a.push_back(v);
    return a;
}

Json weight_system_json(const WeightSystem& ws) {
    Json rows = Json::array();
    for (const auto& r : ws.rows) {
        Json row = Json::array();
        for (long long v : r) row.push_back(v);
        rows.push_back(row);
    }
    Json shift = Json::array();
    for (long long s : ws.shift) shift.push_back(s);
    return Json{{"rows", rows}, {"shift", shift}, {"positive_row", ws.positive_row}};
}

Json kernel_report_json(const GradedKernelReport& report) {
    Json pieces = Json::array();
    for (const auto& p : report.pieces) {
        if (p.kernel_dimension == 0 && !p.skipped) continue;
        Json jp{{"weight", weight_json(p.weight)},
                {"degree", p.degree},
                {"piece_dimension", p.piece_dimension}};
        if (p.skipped) {
            jp["skipped"] = true;
        } else {
            jp["kernel_dimension"] = p.kernel_dimension;
            Json basis = Json::array();
            for (const auto& f : p.basis) basis.push_back(f.to_string());
            jp["basis"] = basis;
            jp["span_dimension"] = p.span_dimension;
            Json news = Json::array();
            for (const auto& f : p.new_generators) news.push_back(f.to_string());
            jp["new_generators"] = news;
        }
        pieces.push_back(jp);
    }
    Json gens = Json::array();
    for (const auto& g : report.generators)
        gens.push_back(Json{{"weight", weight_json(g.weight)}, {"poly", g.poly.to_string()}});
    return Json{{"bound", report.bound},
                {"weight_system", weight_system_json(report.weights)},
                {"pieces", pieces},
                {"generators", gens}};
}

std::string kernel_report_text(const GradedKernelReport& report) {
    std::ostringstream out;
    out << "kernel truncation up to positive degree " << report.bound << "\n";
    out << "weight rows: " << report.weights.num_rows() << " (positive row index "
        << report.weights.positive_row << ")\n";
    for (int r = 0; r < report.weights.num_rows(); ++r) {
        out << "  row " << r << ": (";
        for (size_t j = 0; j < report.weights.rows[r].size(); ++j)
            out << (j ? "," : "") << report.weights.rows[r][j];
        out << ") shift " << report.weights.shift[r] << "\n";
    }
    for (const auto& p : report.pieces) {
        if (p.kernel_dimension == 0 && !p.skipped) continue;
        out << "weight " << weight_to_string(p.weight) << " [deg " << p.degree << "]: ";
        if (p.skipped) {
            out << "skipped (piece dimension " << p.piece_dimension << " over limit)\n";
            continue;
        }
        out << "piece dim " << p.piece_dimension << ", kernel dim " << p.kernel_dimension
            << ", span dim " << p.span_dimension << "\n";
        for (const auto& f : p.basis) out << "  basis: " << f.to_string() << "\n";
        for (const auto& f : p.new_generators) out << "  new generator: " << f.to_string() << "\n";
    }
    out << "generators (" << report.generators.size() << "):\n";
    for (const auto& g : report.generators)
        out << "  " << weight_to_string(g.weight) << "  " << g.poly.to_string() << "\n";
    return out.str();
}

Json module_report_json(const ModuleKernelReport& report, const DeltaModule& m) {
    Json pieces = Json::array();
    for (const auto& p : report.pieces) {
        if (p.kernel_dimension == 0 && !p.skipped) continue;
        Json jp{{"weight", weight_json(p.weight)},
                {"degree", p.degree},
                {"piece_dimension", p.piece_dimension}};
        if (p.skipped) {
            jp["skipped"] = true;
        } else {
            jp["kernel_dimension"] = p.kernel_dimension;
            Json basis = Json::array();
            for (const auto& z : p.basis) basis.push_back(m.element_to_string(z));
            jp["basis"] = basis;
            jp["span_dimension"] = p.span_dimension;
            Json news = Json::array();
            for (const auto& z : p.new_generators) news.push_back(m.element_to_string(z));
            jp["new_generators"] = news;
        }
        pieces.push_back(jp);
    }
    Json gens = Json::array();
    for (const auto& g : report.generators)
        gens.push_back(
            Json{{"weight", weight_json(g.weight)}, {"element", m.element_to_string(g.element)}});
    Json ring_gens = Json::array();
    for (const auto& g : report.ring_generators)
        ring_gens.push_back(Json{{"weight", weight_json(g.weight)}, {"poly", g.poly.to_string()}});
    Json basis_weights = Json::array();
    for (const auto& row : report.basis_weights.rows) {
        Json r = Json::array();
        for (long long v : row) r.push_back(v);
        basis_weights.push_back(r);
    }
    return Json{{"bound", report.bound},
                {"weight_system", weight_system_json(report.weights)},
                {"basis_weights", basis_weights},
                {"ring_generator_bound", report.ring_generator_bound},
                {"ring_generators", ring_gens},
                {"note", "A-coefficients above the ring generator bound are not visible "
                         "to the span test"},
                {"pieces", pieces},
                {"generators", gens}};
}

std::string module_report_text(const ModuleKernelReport& report, const DeltaModule& m) {
    std::ostringstream out;
    out << "module kernel truncation up to positive degree " << report.bound << "\n";
    out << "ring generators used (bound " << report.ring_generator_bound << "): "
        << report.ring_generators.size() << "\n";
    for (const auto& p : report.pieces) {
        if (p.kernel_dimension == 0 && !p.skipped) continue;
        out << "weight " << weight_to_string(p.weight) << " [deg " << p.degree << "]: ";
        if (p.skipped) {
            out << "skipped (piece dimension " << p.piece_dimension << " over limit)\n";
            continue;
        }
        out << "piece dim " << p.piece_dimension << ", kernel dim " << p.kernel_dimension
            << ", span dim " << p.span_dimension << "\n";
        for (const auto& z : p.basis) out << "  basis: " << m.element_to_string(z) << "\n";
        for (const auto& z : p.new_generators)
            out << "  new generator: " << m.element_to_string(z) << "\n";
    }
    out << "generators (" << report.generators.size() << "):\n";
    for (const auto& g : report.generators)
        out << "  " << weight_to_string(g.weight) << "  " << m.element_to_string(g.element) << "\n";
    return out.str();
}

Json kuroda_json(const KurodaVerdict& verdict) {
    Json systems = Json::array();
    for (size_t i = 0; i < verdict.systems.size(); ++i) {
        const auto& sys = verdict.systems[i];
        const auto& res = verdict.results[i];
        Json constraints = Json::array();
        for (const auto& c : sys.constraints) constraints.push_back(c.to_string());
        Json js{{"k", sys.k},
                {"eta", sys.eta.get_str()},
                {"constraints", constraints},
                {"feasible", res.feasible}};
        if (res.feasible) {
            Json w = Json::array();
            for (const auto& q : res.witness) w.push_back(q.get_str());
            js["witness"] = w;
        }
        Json trace = Json::array();
        for (const auto& line : res.trace) trace.push_back(line);
        js["trace"] = trace;
        systems.push_back(js);
    }
    Json out{{"systems", systems}, {"verdict", verdict.verdict_text()}};
    if (!verdict.satisfied) out["failing_k"] = verdict.failing_k;
    if (!verdict.systems.empty()) out["eta"] = verdict.systems.front().eta.get_str();
    return out;
}

std::string kuroda_text(const KurodaVerdict& verdict) {
    std::ostringstream out;
    if (!verdict.systems.empty())
        out << "eta = " << verdict.systems.front().eta.get_str() << "\n";
    for (size_t i = 0; i < verdict.systems.size(); ++i) {
        const auto& sys = verdict.systems[i];
        const auto& res = verdict.results[i];
        out << "system L_{" << sys.k << "," << sys.num_vars << "}:\n";
        for (const auto& c : sys.constraints) out << "  " << c.to_string() << "\n";
        if (res.feasible) {
            out << "  feasible, witness (";
            for (size_t j = 0; j < res.witness.size(); ++j) {
                if (j) out << ", ";
                out << res.witness[j].get_str();
            }
            out << ")\n";
        } else {
            out << "  infeasible\n";
        }
    }
    out << "verdict: " << verdict.verdict_text() << "\n";
    return out.str();
}

Json report_envelope(const std::string& command, const Json& input, const Json& result) {
    return Json{{"schema", kSchemaVersion}, {"command", command}, {"input", input},
                {"result", result}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace lnd
