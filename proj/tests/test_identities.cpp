#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "hypersum/identities.hpp"
#include "hypersum/rng.hpp"

using namespace hypersum;
using namespace hypersum::identities;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Euler-accelerated alternating-series oracle for 3F2(-1) at thm10's point,
// computed from raw terms independently of eval_series
double thm10_series_oracle(double a, double b) {
    const double r = a / (2 * b);
    const double n1 = 0.5 - r, n2 = 0.5 + r, d1 = 1.5 - r, d2 = 1.5 + r;
    const int m = 200;
    std::vector<double> s(m);
    double term = 1.0, acc = 0.0;
    for (int n = 0; n < m; ++n) {
        acc += term;
        s[n] = acc;
        term *= (1.0 + n) * (n1 + n) * (n2 + n) / ((d1 + n) * (d2 + n)) * (-1.0) / (n + 1.0);
    }
    int width = m;
    while (width > 1) {
        for (int i = 0; i + 1 < width; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        --width;
    }
    return s[0];
}

ParamPoint pt(std::initializer_list<std::pair<const char*, double>> fields) {
    ParamPoint p;
    for (auto& [name, value] : fields) p.field(name) = value;
    return p;
}

}  // namespace

TEST_CASE("registry size and unique ids") {
    const auto& reg = registry();
    CHECK(reg.size() >= 30);
    std::set<std::string> ids;
    for (const auto& ident : reg) ids.insert(ident.id);
    CHECK(ids.size() == reg.size());
    // the spec-pinned public ids are all present
    for (const char* id :
         {"dixon_3f2", "vanishing_3f2", "kummer_type_3f2_neg1", "split_3f2_two_2f1",
          "gauss_combined_3f2_1", "classical_4f3_neg1", "classical_4f3_pos1",
          "classical_5f4_pos1", "trigamma_3f2", "digamma_diff_3f2", "beta_diff_3f2_neg1",
          "beta_derivative_3f2_neg1", "tan_form", "sec_form", "sec_squared_form",
          "incomplete_beta_2f1", "thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7",
          "thm8", "thm9", "thm10_secbeta", "thm10_digamma", "red1", "red2"})
        CHECK_NOTHROW(find_identity(id));
    CHECK_THROWS_AS(find_identity("thm11"), DomainError);
}

TEST_CASE("dixon domain check") {
    const auto& dixon = find_identity("dixon_3f2");
    CHECK(dixon.domain(pt({{"a", 1.0}, {"b", 0.3}, {"c", 0.2}})));
    CHECK_FALSE(dixon.domain(pt({{"a", 0.1}, {"b", 1.5}, {"c", 1.5}})));
}

TEST_CASE("vanishing 3F2 is numerically zero") {
    EvalContext ctx;
    auto out = check(find_identity("vanishing_3f2"), pt({{"a", 0.6}, {"b", -0.5}}), ctx);
    CHECK(std::fabs(out.lhs) < 1e-9);
    CHECK(out.rhs == 0.0);
    CHECK(out.pass);
}

TEST_CASE("digamma difference identity at integers") {
    EvalContext ctx;
    auto out = check(find_identity("digamma_diff_3f2"), pt({{"a", 1.0}, {"b", 2.0}}), ctx);
    CHECK(std::fabs(out.lhs - 2.0) < 1e-10);
    CHECK(std::fabs(out.rhs - 2.0) < 1e-13);
    CHECK(out.pass);
}

TEST_CASE("thm10 at (1,2) against the independent Euler oracle") {
    EvalContext ctx;
    const ParamPoint p = pt({{"a", 1.0}, {"b", 2.0}});
    const double oracle = thm10_series_oracle(1.0, 2.0);

    auto secbeta = check(find_identity("thm10_secbeta"), p, ctx);
    CHECK(std::fabs(secbeta.lhs - oracle) < 1e-12);
    CHECK(std::fabs(secbeta.rhs - oracle) < 1e-9);
    CHECK(secbeta.pass);
    // RHS = (3/4) [pi/2 sec(pi/4) - beta(3/4)]
    const double direct =
        0.75 * (kPi / 2 / std::cos(kPi / 4) - specfun::lowercase_beta(0.75));
    CHECK(std::fabs(secbeta.rhs - direct) < 1e-14);

    auto digamma_form = check(find_identity("thm10_digamma"), p, ctx);
    CHECK(std::fabs(digamma_form.rhs - oracle) < 1e-9);
    CHECK(digamma_form.pass);
}

TEST_CASE("thm10 two value forms agree on 100 seeded domain points") {
    EvalContext ctx;
    const auto& f1 = find_identity("thm10_secbeta");
    const auto& f2 = find_identity("thm10_digamma");
    rng::Stream s(99, "thm10_forms", 0);
    int tested = 0;
    while (tested < 100) {
        ParamPoint p = pt({{"a", s.uniform(0.1, 1.9)}, {"b", s.uniform(0.3, 4.0)}});
        if (!f1.domain(p)) continue;
        ++tested;
        auto r1 = f1.rhs(p, ctx);
        auto r2 = f2.rhs(p, ctx);
        CHECK(std::fabs(r1.value - r2.value) <= 1e-10 * (1 + std::fabs(r1.value)));
    }
}

TEST_CASE("thm1 and thm2 stay continuous across b -> a") {
    EvalContext ctx;
    for (const char* id : {"thm1", "thm2"}) {
        const auto& ident = find_identity(id);
        const double v = 1.3, a = 0.4, c = 1.0;
        auto lo = ident.lhs(pt({{"v", v}, {"a", a}, {"b", a * (1 - 1e-4)}, {"c", c}}), ctx);
        auto hi = ident.lhs(pt({{"v", v}, {"a", a}, {"b", a * (1 + 1e-4)}, {"c", c}}), ctx);
        CHECK(std::fabs(lo.value - hi.value) < 1e-2);
        // the Gamma-difference RHS shares the removable structure
        auto rlo = ident.rhs(pt({{"v", v}, {"a", a}, {"b", a * (1 - 1e-4)}, {"c", c}}), ctx);
        auto rhi = ident.rhs(pt({{"v", v}, {"a", a}, {"b", a * (1 + 1e-4)}, {"c", c}}), ctx);
        CHECK(std::fabs(rlo.value - rhi.value) < 1e-2);
    }
}

TEST_CASE("Dixon specialization: the 3F2(-1) value is the 4F3(-1) at 2d=1+a, c=b") {
    EvalContext ctx;
    const auto& kummer = find_identity("kummer_type_3f2_neg1");
    const auto& cls43 = find_identity("classical_4f3_neg1");
    rng::Stream s(7, "dixon_specialization", 0);
    int tested = 0;
    while (tested < 25) {
        const double a = s.uniform(0.3, 1.5);
        const double b = s.uniform(-1.0, 0.2);
        ParamPoint p2 = pt({{"a", a}, {"b", b}});
        ParamPoint p4 = pt({{"a", a}, {"c", b}, {"d", (1 + a) / 2}});
        if (!kummer.domain(p2) || !cls43.domain(p4)) continue;
        ++tested;
        auto lhs2 = kummer.lhs(p2, ctx);
        auto lhs4 = cls43.lhs(p4, ctx);
        CHECK(std::fabs(lhs2.value - lhs4.value) <= 1e-9 * (1 + std::fabs(lhs2.value)));
        auto rhs2 = kummer.rhs(p2, ctx);
        auto rhs4 = cls43.rhs(p4, ctx);
        CHECK(std::fabs(rhs2.value - rhs4.value) <= 1e-12 * (1 + std::fabs(rhs2.value)));
    }
}

TEST_CASE("sec^2 decomposition at the six reference angles") {
    EvalContext ctx;
    const auto& ident = find_identity("sec_squared_form");
    for (double z : {-1.4, -1.0, -0.3, 0.3, 1.0, 1.4}) {
        auto out = check(ident, pt({{"z", z}}), ctx);
        const double sec2 = 1.0 / (std::cos(z) * std::cos(z));
        CHECK(std::fabs(out.lhs - sec2) <= 1e-9 * (1 + sec2));
        CHECK(out.pass);
    }
}

TEST_CASE("red2 constituents: series equals the definite-integral route") {
    EvalContext ctx;
    rng::Stream s(55, "red2_legs", 0);
    const auto& ident = find_identity("red2");
    int tested = 0;
    while (tested < 5) {
        ParamPoint p = pt({{"v", s.uniform(0.3, 1.7)},
                           {"a", s.uniform(0.1, 0.7)},
                           {"b", s.uniform(0.1, 0.7)},
                           {"c", s.uniform(0.8, 1.5)}});
        if (!ident.domain(p)) continue;
        ++tested;
        for (auto [by_series, by_integral] : red2_legs(p, ctx))
            CHECK(std::fabs(by_series - by_integral) <= 1e-8);
    }
}

TEST_CASE("check on a triangle identity carries the quadrature leg") {
    EvalContext ctx;
    const auto& triangle = find_identity("triangle_sinh_sinh_cosh");
    auto out = check(triangle, pt({{"a", 0.5}, {"b", 0.5}, {"c", 1.0}, {"v", 2.0}}), ctx);
    REQUIRE(out.integral.has_value());
    CHECK(std::fabs(*out.integral - out.lhs) < 1e-6);
    CHECK(std::fabs(*out.integral - out.rhs) < 1e-6);
    CHECK(out.pass);
}

TEST_CASE("check rejects out-of-domain points") {
    EvalContext ctx;
    CHECK_THROWS_AS(check(find_identity("vanishing_3f2"), pt({{"a", 0.6}, {"b", 0.5}}), ctx),
                    DomainError);
}

TEST_CASE("every identity passes a handpicked in-domain point") {
    EvalContext ctx;
    struct Sample {
        const char* id;
        ParamPoint p;
    };
    const Sample samples[] = {
        {"dixon_3f2", pt({{"a", 1.0}, {"b", 0.3}, {"c", 0.2}})},
        {"vanishing_3f2", pt({{"a", 0.6}, {"b", -0.5}})},
        {"kummer_type_3f2_neg1", pt({{"a", 0.7}, {"b", 0.2}})},
        {"split_3f2_two_2f1", pt({{"a", 0.4}, {"b", 0.8}, {"c", 1.3}, {"z", 0.5}})},
        {"split_3f2_two_2f1", pt({{"a", 0.4}, {"b", 0.8}, {"c", 1.3}, {"z", -1.0}})},
        {"gauss_combined_3f2_1", pt({{"a", -0.3}, {"b", 0.8}, {"c", 1.3}})},
        {"classical_4f3_neg1", pt({{"a", 1.1}, {"c", 0.2}, {"d", 0.3}})},
        {"classical_4f3_pos1", pt({{"a", 1.1}, {"c", 0.2}, {"d", 0.1}})},
        {"classical_5f4_pos1", pt({{"a", 1.2}, {"c", 0.15}, {"d", 0.2}, {"e", 0.25}})},
        {"trigamma_3f2", pt({{"x", 0.7}})},
        {"digamma_diff_3f2", pt({{"a", 0.6}, {"b", 1.7}})},
        {"beta_diff_3f2_neg1", pt({{"a", 0.6}, {"b", 1.7}})},
        {"beta_derivative_3f2_neg1", pt({{"x", 0.9}})},
        {"tan_form", pt({{"z", 1.0}})},
        {"sec_form", pt({{"z", 1.0}})},
        {"incomplete_beta_2f1", pt({{"a", 0.4}, {"b", 0.9}, {"z", 0.6}})},
        {"thm1", pt({{"v", 1.5}, {"a", 0.4}, {"b", 0.3}, {"c", 0.8}})},
        {"thm2", pt({{"v", 1.5}, {"a", 0.4}, {"b", 0.3}, {"c", 0.8}})},
        {"thm3", pt({{"a", 0.5}, {"b", 2.0}, {"c", 0.4}})},
        {"thm4", pt({{"v", 1.3}, {"a", 0.5}, {"b", 0.3}, {"c", 0.9}})},
        {"thm4", pt({{"v", 1.3}, {"a", 0.3}, {"b", 0.5}, {"c", 0.9}})},  // conjugate
        {"thm5", pt({{"a", 0.6}, {"b", 2.2}, {"c", 0.9}})},
        {"thm6", pt({{"a", 0.6}, {"b", 2.2}, {"c", 0.9}})},
        {"thm7", pt({{"v", 0.8}, {"a", 0.3}, {"b", 0.25}, {"c", 1.1}})},
        {"thm8", pt({{"v", 0.6}, {"a", 0.3}, {"b", 0.25}, {"c", 1.1}})},
        {"thm9", pt({{"a", 0.6}, {"b", 2.2}, {"c", 0.9}})},
        {"thm10_secbeta", pt({{"a", 1.0}, {"b", 2.0}})},
        {"thm10_digamma", pt({{"a", 1.0}, {"b", 2.0}})},
        {"red1", pt({{"a", 0.7}, {"b", 1.9}})},
        {"red2", pt({{"v", 1.2}, {"a", 0.5}, {"b", 0.3}, {"c", 0.8}})},
        {"red2", pt({{"v", 1.2}, {"a", 0.3}, {"b", 0.5}, {"c", 0.8}})},  // conjugate
        {"red2_integral", pt({{"v", 1.2}, {"a", 0.5}, {"b", 0.3}, {"c", 0.8}})},
        {"triangle_sinh_sinh_cosh", pt({{"a", 0.4}, {"b", 0.3}, {"c", 0.8}, {"v", 1.5}})},
        {"triangle_sinh_sinh_sinh", pt({{"a", 0.4}, {"b", 0.3}, {"c", 0.9}, {"v", 1.4}})},
        {"triangle_sinh_cosh_cosh", pt({{"a", 0.5}, {"b", 0.3}, {"c", 1.2}, {"v", 1.0}})},
        {"triangle_sinh_cosh_sinh", pt({{"a", 0.4}, {"b", 0.3}, {"c", 0.9}, {"v", 1.1}})},
        {"triangle_cosh_cosh_cosh", pt({{"a", 0.4}, {"b", 0.35}, {"c", 0.8}, {"v", 1.5}})},
        {"triangle_cosh_cosh_sinh", pt({{"a", 0.2}, {"b", 0.15}, {"c", 1.0}, {"v", 0.7}})},
        {"ramanujan_sech", pt({{"a", 0.7}})},
    };
    for (const auto& sample : samples) {
        CAPTURE(sample.id);
        auto out = check(find_identity(sample.id), sample.p, ctx);
        CHECK(out.pass);
    }
}
