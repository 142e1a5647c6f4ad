#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypersum/harness.hpp"
#include "hypersum/identities.hpp"
#include "hypersum/quad.hpp"
#include "hypersum/series.hpp"

namespace {

std::vector<double> parse_csv_numbers(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

int cmd_eval_pfq(const std::string& num_csv, const std::string& den_csv, double z,
                 double tol, long max_terms) {
    auto nums = parse_csv_numbers(num_csv);
    auto dens = parse_csv_numbers(den_csv);
    auto spec = hypersum::series::make_pfq(std::span<const double>(nums),
                                           std::span<const double>(dens), z);
    auto r = hypersum::series::eval_series(spec, tol, max_terms);
    std::printf("value = %.17g\n", r.value);
    std::printf("terms = %ld\n", r.terms_used);
    std::printf("error_estimate = %.3g\n", r.error_estimate);
    std::printf("class = %s (omega = %.17g)\n", hypersum::series::to_string(r.cls.tag),
                r.cls.omega);
    std::printf("accelerated = %s\n", r.accelerated ? "true" : "false");
    return 0;
}

int cmd_integrate(const std::string& family, double a, double b, double c, double v,
                  double tol) {
    hypersum::quad::IntegralSpec spec{hypersum::quad::family_from_name(family), a, b, c, v};
    auto r = hypersum::quad::integrate(spec, tol);
    std::printf("value = %.17g\n", r.value);
    std::printf("error_estimate = %.3g\n", r.abs_error_estimate);
    std::printf("evaluations = %ld\n", r.evaluations);
    std::printf("truncation_point = %.6g\n", r.truncation_point);
    return 0;
}

int cmd_verify(const hypersum::harness::RunConfig& config, const std::string& out_json,
               const std::string& out_csv) {
    auto report = hypersum::harness::run(config);
    std::printf("%-26s %8s %7s %6s %8s %14s %8s\n", "identity", "samples", "passes",
                "fails", "skipped", "max_rel_resid", "omega_ex");
    for (const auto& s : report.summary) {
        std::printf("%-26s %8d %7d %6d %8d %14.3g %8ld\n", s.id.c_str(), s.samples,
                    s.passes, s.fails, s.skipped, s.max_rel_residual, s.omega_excluded);
    }
    std::printf("overall: %s\n", report.all_pass ? "PASS" : "FAIL");
    if (!out_json.empty()) {
        std::ofstream f(out_json);
        f << hypersum::harness::report_to_json(report);
    }
    if (!out_csv.empty()) {
        std::ofstream f(out_csv);
        f << hypersum::harness::report_to_csv(report);
    }
    return report.all_pass ? 0 : 1;
}

int cmd_list() {
    for (const auto& ident : hypersum::identities::registry())
        std::printf("%-26s %s\n", ident.id.c_str(), ident.provenance.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypersum: pFq evaluation, hyperbolic integrals, and identity verification"};
    app.require_subcommand(1);

    // eval pfq
    auto* eval = app.add_subcommand("eval", "evaluate a series");
    eval->require_subcommand(1);
    auto* pfq = eval->add_subcommand("pfq", "evaluate pFq(z) term by term");
    std::string num_csv, den_csv;
    double z = 0.0, series_tol = 1e-12;
    long max_terms = 20000;
    pfq->add_option("--num", num_csv, "numerator parameters, comma separated")->required();
    pfq->add_option("--den", den_csv, "denominator parameters, comma separated");
    pfq->add_option("--z", z, "series argument")->required();
    pfq->add_option("--tol", series_tol, "relative term tolerance");
    pfq->add_option("--max-terms", max_terms, "term cap");

    // integrate
    auto* integ = app.add_subcommand("integrate", "semi-infinite hyperbolic integral");
    std::string family;
    double ia = 0, ib = 0, ic = 1, iv = 1, quad_tol = 1e-10;
    integ->add_option("--family", family, "integrand family name")->required();
    integ->add_option("--a", ia, "a parameter")->required();
    integ->add_option("--b", ib, "b parameter");
    integ->add_option("--c", ic, "c parameter");
    integ->add_option("--v", iv, "v exponent");
    integ->add_option("--tol", quad_tol, "absolute tolerance");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity verification harness");
    hypersum::harness::RunConfig config;
    std::string out_json, out_csv;
    verify->add_option("--identity", config.identity_filter, "id glob filter");
    verify->add_option("--samples", config.samples_per_identity, "points per identity");
    verify->add_option("--seed", config.seed, "sampling seed");
    verify->add_option("--series-tol", config.series_tol, "series tolerance");
    verify->add_option("--quad-tol", config.quad_tol, "quadrature tolerance");
    verify->add_option("--pass-threshold", config.pass_threshold,
                       "override per-identity pass tolerance");
    verify->add_option("--threads", config.threads,
                       "worker count (0 = serial; default: HYPERSUM_THREADS)");
    verify->add_option("--boxes", config.boxes_path, "sampling boxes JSON path");
    verify->add_option("--out", out_json, "write JSON report");
    verify->add_option("--csv", out_csv, "write CSV report");

    auto* list = app.add_subcommand("list", "list registered identities");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pfq->parsed()) return cmd_eval_pfq(num_csv, den_csv, z, series_tol, max_terms);
        if (integ->parsed()) return cmd_integrate(family, ia, ib, ic, iv, quad_tol);
        if (verify->parsed()) return cmd_verify(config, out_json, out_csv);
        if (list->parsed()) return cmd_list();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
