#include "hypersum/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "embedded_boxes.hpp"
#include "hypersum/rng.hpp"

namespace hypersum::harness {

namespace {

BoxTable parse_boxes(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError("sampling boxes (" + origin + "): " + e.what());
    }
    BoxTable table;
    for (auto& [id, entry] : doc.items()) {
        SampleBox box;
        if (entry.contains("ranges")) {
            for (auto& [var, lohi] : entry.at("ranges").items())
                box.ranges[var] = {lohi.at(0).get<double>(), lohi.at(1).get<double>()};
        }
        if (entry.contains("choices")) {
            for (auto& [var, list] : entry.at("choices").items())
                box.choices[var] = list.get<std::vector<double>>();
        }
        table[id] = std::move(box);
    }
    return table;
}

const SampleBox& box_for(const BoxTable& table, const std::string& id) {
    auto it = table.find(id);
    if (it == table.end())
        throw DomainError("no sampling box configured for identity " + id);
    return it->second;
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_nonconverged: return "skipped_nonconverged";
        case Status::skipped_domain: return "skipped_domain";
    }
    return "?";
}

BoxTable default_boxes() {
    return parse_boxes(kEmbeddedBoxesJson, "embedded defaults");
}

BoxTable load_boxes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sampling boxes file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_boxes(ss.str(), path);
}

bool glob_match(const std::string& pattern, const std::string& text) {
    // * and ? only; iterative matcher with backtracking over the last star
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::vector<ParamPoint> sample_domain(const identities::Identity& identity,
                                      const SampleBox& box, uint64_t seed, int n,
                                      SampleStats* stats) {
    if (n < 1) throw DomainError("sample_domain: n must be >= 1");
    std::vector<ParamPoint> points;
    points.reserve(n);
    long rejections = 0;
    const long budget = 10000L * n;

    for (int i = 0; i < n; ++i) {
        rng::Stream stream(seed, identity.id, static_cast<uint64_t>(i));
        ParamPoint p;
        // discrete choices are pinned by index, continuous ranges are redrawn
        for (const auto& [var, list] : box.choices)
            p.field(var) = list[static_cast<std::size_t>(i) % list.size()];

        bool accepted = false;
        while (!accepted) {
            for (const auto& [var, lohi] : box.ranges)
                p.field(var) = lohi.first == lohi.second
                                   ? lohi.first
                                   : stream.uniform(lohi.first, lohi.second);
            if (identity.domain(p)) {
                if (identity.exclude_nonpositive_omega && identity.series_omega &&
                    identity.series_omega(p) <= 0.0) {
                    if (stats) ++stats->omega_excluded;
                } else {
                    accepted = true;
                    break;
                }
            }
            if (stats) ++stats->rejected;
            if (++rejections > budget)
                throw DomainTooThinError("sample_domain: rejection budget exhausted for " +
                                         identity.id);
        }
        points.push_back(p);
    }
    return points;
}

namespace {

struct Task {
    const identities::Identity* identity;
    int point_index;
    ParamPoint point;
    double tolerance;
};

VerificationRecord run_task(const Task& task, const identities::EvalContext& ctx) {
    VerificationRecord rec;
    rec.identity_id = task.identity->id;
    rec.point_index = task.point_index;
    rec.point = task.point;
    try {
        auto outcome = identities::check(*task.identity, task.point, ctx);
        rec.lhs = outcome.lhs;
        rec.rhs = outcome.rhs;
        rec.integral = outcome.integral;
        rec.abs_residual = outcome.abs_residual;
        rec.rel_residual = outcome.rel_residual;
        rec.terms_used = outcome.terms_used;
        rec.status = outcome.rel_residual <= task.tolerance ? Status::pass : Status::fail;
    } catch (const NonConvergedError&) {
        rec.status = Status::skipped_nonconverged;
    } catch (const DomainError&) {
        rec.status = Status::skipped_domain;
    }
    return rec;
}

int resolve_threads(const RunConfig& config) {
    int threads = config.threads;
    if (threads < 0) {
        if (const char* env = std::getenv("HYPERSUM_THREADS")) threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (threads < 0) threads = omp_get_max_threads();
#else
    threads = 0;
#endif
    return threads;
}

RunReport run_impl(const RunConfig& config, int threads) {
    if (!(config.series_tol > 0.0) || !(config.quad_tol > 0.0) ||
        config.samples_per_identity < 1 || config.pass_threshold < 0.0)
        throw DomainError("run: invalid configuration");
    BoxTable boxes;
    if (!config.boxes_path.empty()) {
        boxes = load_boxes(config.boxes_path);
    } else if (const char* env = std::getenv("HYPERSUM_BOXES")) {
        boxes = load_boxes(env);
    } else {
        boxes = default_boxes();
    }

    identities::EvalContext ctx{config.series_tol, 20000, config.quad_tol};

    std::vector<Task> tasks;
    std::vector<IdentitySummary> summaries;
    for (const auto& ident : identities::registry()) {
        if (!config.identity_filter.empty() &&
            !glob_match(config.identity_filter, ident.id))
            continue;
        SampleStats stats;
        auto points = sample_domain(ident, box_for(boxes, ident.id), config.seed,
                                    config.samples_per_identity, &stats);
        IdentitySummary summary;
        summary.id = ident.id;
        summary.samples = static_cast<int>(points.size());
        summary.omega_excluded = stats.omega_excluded;
        const double tol =
            config.pass_threshold > 0.0 ? config.pass_threshold : ident.tolerance;
        for (int i = 0; i < static_cast<int>(points.size()); ++i) {
            if (ident.pair_regime && ident.pair_regime(points[i]))
                ++summary.pair_regime_points;
            tasks.push_back({&ident, i, points[i], tol});
        }
        summaries.push_back(std::move(summary));
    }

    std::vector<VerificationRecord> records(tasks.size());
#ifdef _OPENMP
    if (threads > 0) {
        std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            try {
                records[i] = run_task(tasks[i], ctx);
            } catch (...) {
#pragma omp critical
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            records[i] = run_task(tasks[i], ctx);
    }
#else
    (void)threads;
    for (std::size_t i = 0; i < tasks.size(); ++i) records[i] = run_task(tasks[i], ctx);
#endif

    // records are produced in (identity, point index) order already; keep the
    // contract explicit regardless of scheduling
    std::stable_sort(records.begin(), records.end(),
                     [](const VerificationRecord& x, const VerificationRecord& y) {
                         if (x.identity_id != y.identity_id)
                             return x.identity_id < y.identity_id;
                         return x.point_index < y.point_index;
                     });

    RunReport report;
    report.config = config;
    report.records = std::move(records);
    report.all_pass = true;
    std::sort(summaries.begin(), summaries.end(),
              [](const IdentitySummary& x, const IdentitySummary& y) { return x.id < y.id; });
    for (auto& summary : summaries) {
        for (const auto& rec : report.records) {
            if (rec.identity_id != summary.id) continue;
            switch (rec.status) {
                case Status::pass: ++summary.passes; break;
                case Status::fail: ++summary.fails; break;
                default: ++summary.skipped; break;
            }
            if (rec.status == Status::pass || rec.status == Status::fail) {
                summary.max_abs_residual = std::max(summary.max_abs_residual, rec.abs_residual);
                summary.max_rel_residual = std::max(summary.max_rel_residual, rec.rel_residual);
            }
        }
        summary.pass = summary.fails == 0;
        if (!summary.pass) report.all_pass = false;
        report.summary.push_back(summary);
    }
    return report;
}

}  // namespace

RunReport run(const RunConfig& config) { return run_impl(config, resolve_threads(config)); }

RunReport run_serial(const RunConfig& config) { return run_impl(config, 0); }

}  // namespace hypersum::harness
