// Benchmark: serial reference harness vs the OpenMP-parallel one on the same
// configuration, with a record-level equality check.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypersum/harness.hpp"

using hypersum::harness::RunConfig;
using hypersum::harness::RunReport;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_records(const RunReport& x, const RunReport& y) {
    if (x.records.size() != y.records.size()) return false;
    for (std::size_t i = 0; i < x.records.size(); ++i) {
        const auto& r = x.records[i];
        const auto& s = y.records[i];
        if (r.identity_id != s.identity_id || r.point_index != s.point_index ||
            r.lhs != s.lhs || r.rhs != s.rhs || r.abs_residual != s.abs_residual)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig config;
    config.samples_per_identity = argc > 1 ? std::atoi(argv[1]) : 10;
    config.seed = 42;

    auto t0 = std::chrono::steady_clock::now();
    config.threads = 0;
    RunReport serial = hypersum::harness::run_serial(config);
    const double t_serial = seconds_since(t0);

    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    t0 = std::chrono::steady_clock::now();
    config.threads = workers;
    RunReport parallel = hypersum::harness::run(config);
    const double t_parallel = seconds_since(t0);

    std::printf("records: %zu\n", serial.records.size());
    std::printf("serial:   %8.3f s\n", t_serial);
    std::printf("parallel: %8.3f s  (%d workers, speedup %.2fx)\n", t_parallel, workers,
                t_serial / t_parallel);
    if (!same_records(serial, parallel)) {
        std::printf("MISMATCH: parallel records differ from the serial reference\n");
        return 1;
    }
    std::printf("record sets identical\n");
    return serial.all_pass && parallel.all_pass ? 0 : 1;
}
