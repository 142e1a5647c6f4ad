#include <chrono>
#include <cstdio>
#include <ctime>
#include <string>

#include "hypersum/harness.hpp"

// Hand-rolled JSON/CSV emission: report numbers are serialized as decimal
// with 17 significant digits so that identical runs produce byte-identical
// files (modulo the timestamp).

namespace hypersum::harness {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(long v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c) & 0xff);
            out += buf;
        } else {
            out += c;
        }
    }
    return out;
}

void append_point(std::string& out, const ParamPoint& p) {
    out += "{";
    bool first = true;
    for (const char* name : ParamPoint::field_names) {
        const auto& f = p.field(name);
        if (!f) continue;
        if (!first) out += ", ";
        first = false;
        out += "\"";
        out += name;
        out += "\": ";
        out += fmt(*f);
    }
    out += "}";
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string report_to_json(const RunReport& report, bool include_timestamp) {
    std::string out;
    out.reserve(1 << 16);
    out += "{\n";
    out += "  \"config\": {";
    out += "\"seed\": " + std::to_string(report.config.seed);
    out += ", \"samples_per_identity\": " + fmt(report.config.samples_per_identity);
    out += ", \"series_tol\": " + fmt(report.config.series_tol);
    out += ", \"quad_tol\": " + fmt(report.config.quad_tol);
    out += ", \"pass_threshold\": " + fmt(report.config.pass_threshold);
    out += ", \"identity_filter\": \"" + json_escape(report.config.identity_filter) + "\"";
    out += "},\n";
    if (include_timestamp) out += "  \"timestamp\": \"" + timestamp_now() + "\",\n";
    out += "  \"records\": [\n";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        out += "    {\"identity_id\": \"" + json_escape(r.identity_id) + "\"";
        out += ", \"point_index\": " + fmt(r.point_index);
        out += ", \"point\": ";
        append_point(out, r.point);
        out += ", \"lhs\": " + fmt(r.lhs);
        out += ", \"rhs\": " + fmt(r.rhs);
        if (r.integral) out += ", \"integral\": " + fmt(*r.integral);
        out += ", \"abs_residual\": " + fmt(r.abs_residual);
        out += ", \"rel_residual\": " + fmt(r.rel_residual);
        out += ", \"terms_used\": " + fmt(r.terms_used);
        out += std::string(", \"status\": \"") + to_string(r.status) + "\"}";
        out += (i + 1 < report.records.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"summary\": {\n    \"identities\": [\n";
    for (std::size_t i = 0; i < report.summary.size(); ++i) {
        const auto& s = report.summary[i];
        out += "      {\"id\": \"" + json_escape(s.id) + "\"";
        out += ", \"samples\": " + fmt(s.samples);
        out += ", \"passes\": " + fmt(s.passes);
        out += ", \"fails\": " + fmt(s.fails);
        out += ", \"skipped\": " + fmt(s.skipped);
        out += ", \"max_abs_residual\": " + fmt(s.max_abs_residual);
        out += ", \"max_rel_residual\": " + fmt(s.max_rel_residual);
        out += ", \"omega_excluded\": " + fmt(s.omega_excluded);
        out += ", \"pair_regime_points\": " + fmt(s.pair_regime_points);
        out += std::string(", \"pass\": ") + (s.pass ? "true" : "false") + "}";
        out += (i + 1 < report.summary.size()) ? ",\n" : "\n";
    }
    out += "    ],\n";
    out += std::string("    \"all_pass\": ") + (report.all_pass ? "true" : "false") + "\n";
    out += "  }\n}\n";
    return out;
}

std::string report_to_csv(const RunReport& report) {
    std::string out = "identity_id,point_index";
    for (const char* name : ParamPoint::field_names) {
        out += ",";
        out += name;
    }
    out += ",lhs,rhs,integral,abs_residual,rel_residual,terms_used,status\n";
    for (const auto& r : report.records) {
        out += r.identity_id + "," + fmt(r.point_index);
        for (const char* name : ParamPoint::field_names) {
            const auto& f = r.point.field(name);
            out += ",";
            if (f) out += fmt(*f);
        }
        out += "," + fmt(r.lhs) + "," + fmt(r.rhs) + ",";
        if (r.integral) out += fmt(*r.integral);
        out += "," + fmt(r.abs_residual) + "," + fmt(r.rel_residual);
        out += "," + fmt(r.terms_used) + "," + to_string(r.status) + "\n";
    }
    return out;
}

}  // namespace hypersum::harness
