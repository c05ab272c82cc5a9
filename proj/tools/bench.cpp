// Compares the serial reference path (--jobs 1) with the OpenMP path on the
// graded kernel computation, and checks the reports agree.
#include <chrono>
#include <iostream>
#include <string>

#include "lnd/catalog.hpp"
#include "lnd/report.hpp"

using namespace lnd;
namespace chrono = std::chrono;

namespace {

double run_once(const Derivation& d, const WeightSystem& ws, long long bound, int jobs,
                std::string& rendered) {
    auto t0 = chrono::steady_clock::now();
    KernelOptions opt;
    opt.jobs = jobs;
    GradedKernelReport report = kernel_generators(d, ws, bound, opt);
    auto t1 = chrono::steady_clock::now();
    rendered = kernel_report_text(report);
    return chrono::duration_cast<chrono::duration<double>>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::string id = argc > 1 ? argv[1] : "roberts";
    long long bound = argc > 2 ? std::stoll(argv[2]) : 12;
    int jobs = argc > 3 ? std::stoi(argv[3]) : 4;

    std::map<std::string, long long> params;
    if (id == "roberts" || id == "cor63") params = {{"n", 3}, {"t", 2}};
    if (id == "thm52") params = {{"n", 4}};

    CatalogEntry entry = catalog_get(id, params);
    const Derivation& d = entry.is_module() ? entry.module().base() : entry.derivation();
    WeightSystem ws = infer_weights(d);

    std::cout << "benchmark: kernel_generators(" << id << "), bound " << bound << "\n";
    std::string serial_out, parallel_out;
    double serial = run_once(d, ws, bound, 1, serial_out);
    std::cout << "  serial reference: " << serial << " s\n";
    double parallel = run_once(d, ws, bound, jobs, parallel_out);
    std::cout << "  OpenMP (" << jobs << " jobs):  " << parallel << " s\n";
    std::cout << "  speedup: " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
    if (serial_out != parallel_out) {
        std::cout << "MISMATCH: serial and parallel reports differ\n";
        return 1;
    }
    std::cout << "  reports identical: yes\n";
    return 0;
}
