#pragma once

#include <string>

#include <json.hpp>

#include "lnd/catalog.hpp"
#include "lnd/dmodule.hpp"
#include "lnd/kernel.hpp"
#include "lnd/kuroda.hpp"

namespace lnd {

using Json = nlohmann::json;

// JSON report schema version ("schema": 1 at the top level).
inline constexpr int kSchemaVersion = 1;

Json weight_json(const Weight& w);
Json weight_system_json(const WeightSystem& ws);

// Kernel / module-kernel reports. Pieces with an empty kernel are omitted
// from the rendered output (they carry no information) unless skipped.
Json kernel_report_json(const GradedKernelReport& report);
std::string kernel_report_text(const GradedKernelReport& report);

Json module_report_json(const ModuleKernelReport& report, const DeltaModule& m);
std::string module_report_text(const ModuleKernelReport& report, const DeltaModule& m);

Json kuroda_json(const KurodaVerdict& verdict);
std::string kuroda_text(const KurodaVerdict& verdict);

// Envelope: {"schema": 1, "command": ..., "input": ..., "result": ...}
Json report_envelope(const std::string& command, const Json& input, const Json& result);
std::string render_json(const Json& j);

} // namespace lnd
