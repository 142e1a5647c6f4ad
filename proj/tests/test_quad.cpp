#include <doctest.h>

#include <cmath>

#include "hypersum/gauss_kronrod.hpp"
#include "hypersum/quad.hpp"
#include "hypersum/rng.hpp"
#include "hypersum/series.hpp"

using namespace hypersum;
using namespace hypersum::quad;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double raw_integrand(const IntegralSpec& spec, double x) {
    double num = 1;
    switch (spec.family) {
        case Family::SinhSinhOverCoshV:
        case Family::SinhSinhOverSinhV:
            num = std::sinh(spec.a * x) * std::sinh(spec.b * x);
            break;
        case Family::SinhCoshOverCoshV:
        case Family::SinhCoshOverSinhV:
            num = std::sinh(spec.a * x) * std::cosh(spec.b * x);
            break;
        case Family::CoshCoshOverCoshV:
        case Family::CoshCoshOverSinhV:
            num = std::cosh(spec.a * x) * std::cosh(spec.b * x);
            break;
        case Family::CosOverCoshPi:
            return std::cos(2 * spec.a * x) / std::cosh(kPi * x);
    }
    const bool sinh_den = spec.family == Family::SinhSinhOverSinhV ||
                          spec.family == Family::SinhCoshOverSinhV ||
                          spec.family == Family::CoshCoshOverSinhV;
    const double den = sinh_den ? std::sinh(spec.c * x) : std::cosh(spec.c * x);
    return num * std::pow(den, -spec.v);
}

// brute-force composite trapezoid on [h, X] (open at the origin), the
// recorded-style oracle for spot values
double trapezoid_oracle(const IntegralSpec& spec, double X, long panels) {
    const double h = X / panels;
    double acc = 0.5 * (raw_integrand(spec, h) + raw_integrand(spec, X));
    for (long i = 2; i < panels; ++i) acc += raw_integrand(spec, i * h);
    return acc * h;
}

}  // namespace

TEST_CASE("family name round trip") {
    for (Family f : {Family::SinhSinhOverCoshV, Family::SinhSinhOverSinhV,
                     Family::SinhCoshOverCoshV, Family::SinhCoshOverSinhV,
                     Family::CoshCoshOverCoshV, Family::CoshCoshOverSinhV,
                     Family::CosOverCoshPi})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("sech_pow"), DomainError);
}

TEST_CASE("sech^2 integral equals 1") {
    auto r = integrate({Family::CoshCoshOverCoshV, 0.0, 0.0, 1.0, 2.0}, 1e-11);
    CHECK(std::fabs(r.value - 1.0) < 1e-10);
    CHECK(r.abs_error_estimate < 1e-9);
}

TEST_CASE("zero numerator gives zero") {
    auto r = integrate({Family::SinhSinhOverCoshV, 0.0, 0.4, 1.0, 2.0}, 1e-10);
    CHECK(std::fabs(r.value) < 1e-12);
}

TEST_CASE("spot value (pi/8) sec(pi/4) against the brute-force trapezoid oracle") {
    const IntegralSpec spec{Family::SinhSinhOverCoshV, 1.0, 2.0, 2.0, 2.0};
    auto r = integrate(spec, 1e-10);
    const double closed = kPi / 8.0 / std::cos(kPi / 4.0);
    CHECK(std::fabs(r.value - closed) < 1e-9);
    const double brute = trapezoid_oracle(spec, 40.0, 1000000);
    CHECK(std::fabs(r.value - brute) < 1e-8);
}

TEST_CASE("Ramanujan family") {
    auto r0 = integrate({Family::CosOverCoshPi, 0.0, 0, 0, 0}, 1e-11);
    CHECK(std::fabs(r0.value - 0.5) < 1e-10);
    auto r = integrate({Family::CosOverCoshPi, 0.7, 0, 0, 0}, 1e-11);
    CHECK(std::fabs(r.value - 0.5 / std::cosh(0.7)) < 1e-10);
    CHECK(std::fabs(closed_form({Family::CosOverCoshPi, 0.7, 0, 0, 0}) -
                    0.5 / std::cosh(0.7)) < 1e-15);
}

TEST_CASE("decay and singularity guards") {
    CHECK_THROWS_AS(integrate({Family::SinhSinhOverCoshV, 2.0, 1.0, 1.0, 2.0}, 1e-8),
                    DecayError);
    CHECK_THROWS_AS(integrate({Family::CoshCoshOverSinhV, 0.1, 0.1, 1.0, 1.2}, 1e-8),
                    SingularityError);
    CHECK_THROWS_AS(integrate({Family::SinhCoshOverSinhV, 0.1, 0.1, 2.0, 2.5}, 1e-8),
                    SingularityError);
    CHECK_THROWS_AS(integrate({Family::SinhSinhOverCoshV, 0.1, 0.1, -1.0, 2.0}, 1e-8),
                    DomainError);
}

TEST_CASE("sinh^2(ax)/sinh^2(x) chain value at a = 1/2 and general a") {
    auto r = integrate({Family::SinhSinhOverSinhV, 0.5, 0.5, 1.0, 2.0}, 1e-10);
    CHECK(std::fabs(r.value - 0.5) < 1e-8);
    const double a = 0.3;
    auto r2 = integrate({Family::SinhSinhOverSinhV, a, a, 1.0, 2.0}, 1e-10);
    CHECK(std::fabs(r2.value - 0.5 * (1 - a * kPi / std::tan(a * kPi))) < 1e-8);
}

TEST_CASE("closed forms match quadrature across the catalogue") {
    const IntegralSpec cases[] = {
        {Family::SinhSinhOverCoshV, 0.4, 0.3, 0.8, 1.5},
        {Family::SinhSinhOverCoshV, 0.5, 0.7, 2.0, 1.0},   // sine-product special
        {Family::SinhSinhOverSinhV, 0.4, 0.3, 0.9, 1.4},
        {Family::SinhCoshOverCoshV, 0.6, 0.8, 2.1, 1.0},   // beta-term form at v=1
        {Family::SinhCoshOverSinhV, 0.4, 0.3, 0.9, 1.1},
        {Family::SinhCoshOverSinhV, 1.0, 0.5, 3.0, 1.0},   // sine-quotient special
        {Family::CoshCoshOverCoshV, 0.4, 0.35, 0.8, 1.5},
        {Family::CoshCoshOverCoshV, 0.5, 0.7, 2.0, 1.0},   // cosine-quotient special
        {Family::CoshCoshOverSinhV, 0.2, 0.15, 1.0, 0.7},
    };
    for (const auto& spec : cases) {
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.v);
        auto q = integrate(spec, 1e-10);
        CHECK(std::fabs(q.value - closed_form(spec)) < 1e-8);
    }
}

TEST_CASE("closed form value for the sine-quotient special") {
    // sinh(ax)cosh(bx)/sinh(cx) at (1, 0.5, 3, 1)
    const double want = (kPi / 6) * std::sin(kPi / 3) /
                        (std::cos(kPi / 6) + std::cos(kPi / 3));
    CHECK(std::fabs(closed_form({Family::SinhCoshOverSinhV, 1.0, 0.5, 3.0, 1.0}) - want) <
          1e-14);
    CHECK(std::fabs(integrate({Family::SinhCoshOverSinhV, 1.0, 0.5, 3.0, 1.0}, 1e-10).value -
                    want) < 1e-8);
}

TEST_CASE("closed form domain errors") {
    CHECK_THROWS_AS(closed_form({Family::SinhCoshOverCoshV, 0.3, 0.2, 1.0, 1.5}),
                    DomainError);
    CHECK_THROWS_AS(closed_form({Family::SinhSinhOverSinhV, 0.1, 0.1, 2.0, 1.0}),
                    DomainError);  // cos(v pi/2) = 0
}

TEST_CASE("series_form triangle: prefactor and spec reproduce the integral") {
    const IntegralSpec cases[] = {
        {Family::SinhSinhOverCoshV, 0.5, 0.5, 1.0, 2.0},
        {Family::SinhSinhOverSinhV, 0.4, 0.3, 0.9, 1.4},
        {Family::SinhCoshOverCoshV, 0.5, 0.3, 0.8, 1.3},
        {Family::SinhCoshOverCoshV, 0.3, 0.5, 0.8, 1.3},   // conjugate-pair regime
        {Family::SinhCoshOverSinhV, 0.4, 0.3, 0.9, 1.1},
        {Family::SinhCoshOverSinhV, 0.3, 0.4, 0.9, 1.1},   // conjugate-pair regime
        {Family::CoshCoshOverCoshV, 0.4, 0.35, 0.8, 1.5},
        {Family::CoshCoshOverSinhV, 0.2, 0.15, 1.0, 0.7},
    };
    for (const auto& spec : cases) {
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.a);
        auto sf = series_form(spec);
        auto sr = series::eval_series(sf.spec, 1e-12, 20000);
        auto q = integrate(spec, 1e-10);
        CHECK(std::fabs(sf.prefactor * sr.value - q.value) < 1e-6);
    }
}

TEST_CASE("series_form prefactor spot value") {
    auto sf = series_form({Family::SinhSinhOverCoshV, 0.5, 0.5, 1.0, 2.0});
    CHECK(sf.prefactor == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(sf.spec.z == -1.0);
    CHECK(sf.spec.numerators.size() == 6);
    CHECK(sf.spec.denominators.size() == 5);
}

TEST_CASE("series_form degenerate cases") {
    // a = b: the sigma pair degenerates to im = 0 (stored as reals)
    auto sf = series_form({Family::SinhCoshOverCoshV, 0.5, 0.5, 1.0, 1.2});
    for (const auto& e : sf.spec.denominators) CHECK((!e.is_pair || e.im == 0.0));

    // a = b = 0 collapses the 8F7 to the cosh/cosh^v shape: upper and lower
    // parameters cancel pairwise, and the series still evaluates
    auto sf0 = series_form({Family::CoshCoshOverCoshV, 0.0, 0.0, 1.0, 1.5});
    auto sr = series::eval_series(sf0.spec, 1e-12, 20000);
    auto q = integrate({Family::CoshCoshOverCoshV, 0.0, 0.0, 1.0, 1.5}, 1e-10);
    CHECK(std::fabs(sf0.prefactor * sr.value - q.value) < 1e-7);

    CHECK_THROWS_AS(series_form({Family::CosOverCoshPi, 0.5, 0, 0, 0}), DomainError);
}

TEST_CASE("a <-> b symmetry of the symmetric families") {
    rng::Stream s(31, "quad_symmetry", 0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = s.uniform(0.1, 0.5), b = s.uniform(0.1, 0.5);
        const double c = s.uniform(0.9, 1.3), v = s.uniform(1.0, 1.8);
        for (Family fam : {Family::SinhSinhOverCoshV, Family::CoshCoshOverCoshV}) {
            auto r1 = integrate({fam, a, b, c, v}, 1e-11);
            auto r2 = integrate({fam, b, a, c, v}, 1e-11);
            CHECK(std::fabs(r1.value - r2.value) <=
                  1e-12 * std::max(std::fabs(r1.value), 1.0));
        }
    }
}

TEST_CASE("monotone truncation: doubling X stays within the reported error") {
    const IntegralSpec spec{Family::SinhSinhOverCoshV, 0.4, 0.3, 0.9, 1.6};
    auto r = integrate(spec, 1e-10);
    const double X2 = 2 * r.truncation_point;
    auto f = [&](double x) { return raw_integrand(spec, x); };
    auto wide = quadcore::integrate_adaptive(f, 0.0, X2, 1e-12);
    CHECK(std::fabs(wide.value - r.value) <= r.abs_error_estimate + 1e-12);
}
