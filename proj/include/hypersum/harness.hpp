#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersum/identities.hpp"

// Seeded sampling of identity domains, batch verification runs, and report
// serialization. run() is the only concurrent entry point in the library;
// run_serial() is the reference implementation it must match record-for-record.

namespace hypersum::harness {

using identities::ParamPoint;

// Per-identity sampling region: continuous ranges plus optional discrete
// choices (cycled by point index).
struct SampleBox {
    std::map<std::string, std::pair<double, double>> ranges;
    std::map<std::string, std::vector<double>> choices;
};

using BoxTable = std::map<std::string, SampleBox>;

BoxTable default_boxes();                       // compiled-in copy of the config file
BoxTable load_boxes(const std::string& path);   // DomainError on parse failure

struct RunConfig {
    uint64_t seed = 42;
    int samples_per_identity = 25;
    double series_tol = 1e-12;
    double quad_tol = 1e-10;
    // 0 = per-identity defaults; a positive value overrides every identity
    double pass_threshold = 0.0;
    std::string identity_filter;  // glob over ids; empty = all
    // -1 = consult HYPERSUM_THREADS (0 there means serial); 0 = serial
    int threads = -1;
    std::string boxes_path;  // empty = embedded defaults (HYPERSUM_BOXES overrides)
};

enum class Status { pass, fail, skipped_nonconverged, skipped_domain };
const char* to_string(Status s);

struct VerificationRecord {
    std::string identity_id;
    int point_index = 0;
    ParamPoint point;
    double lhs = 0;
    double rhs = 0;
    std::optional<double> integral;
    double abs_residual = 0;
    double rel_residual = 0;
    long terms_used = 0;
    Status status = Status::fail;
};

struct IdentitySummary {
    std::string id;
    int samples = 0;
    int passes = 0;
    int fails = 0;
    int skipped = 0;
    double max_abs_residual = 0;
    double max_rel_residual = 0;
    long omega_excluded = 0;     // sampler rejections with omega <= 0
    int pair_regime_points = 0;  // accepted points in the conjugate-pair regime
    bool pass = false;
};

struct RunReport {
    RunConfig config;
    std::vector<VerificationRecord> records;
    std::vector<IdentitySummary> summary;
    bool all_pass = false;
};

struct SampleStats {
    long omega_excluded = 0;
    long rejected = 0;
};

// Rejection sampling from the identity's box intersected with its domain
// predicate; deterministic per (seed, identity, index). Raises
// DomainTooThinError after 10^4 * n rejections.
std::vector<ParamPoint> sample_domain(const identities::Identity& identity,
                                      const SampleBox& box, uint64_t seed, int n,
                                      SampleStats* stats = nullptr);

RunReport run(const RunConfig& config);
RunReport run_serial(const RunConfig& config);

// Report serialization; doubles carry 17 significant digits. The timestamp
// line is the only non-reproducible part of the JSON.
std::string report_to_json(const RunReport& report, bool include_timestamp = true);
std::string report_to_csv(const RunReport& report);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace hypersum::harness
