#pragma once

#include <string>

#include "hypersum/errors.hpp"
#include "hypersum/series.hpp"

// Semi-infinite quadrature of the hyperbolic integrand families
// int_0^inf num1(a x) num2(b x) / den^v(c x) dx, plus their catalogued
// closed forms and pFq series forms.

namespace hypersum::quad {

enum class Family {
    SinhSinhOverCoshV,  // sinh(ax) sinh(bx) / cosh^v(cx)
    SinhSinhOverSinhV,
    SinhCoshOverCoshV,  // sinh(ax) cosh(bx) / cosh^v(cx)
    SinhCoshOverSinhV,
    CoshCoshOverCoshV,
    CoshCoshOverSinhV,
    CosOverCoshPi,      // cos(2ax) / cosh(pi x); only a is read
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // DomainError on unknown

struct IntegralSpec {
    Family family = Family::SinhSinhOverCoshV;
    double a = 0, b = 0, c = 1, v = 1;
};

struct QuadratureResult {
    double value = 0;
    double abs_error_estimate = 0;
    long evaluations = 0;
    double truncation_point = 0;
};

// Truncate at X from the exponential decay bound, then adaptive
// Gauss-Kronrod on [0, X] with an x = u^2 origin substitution for the
// singular sinh^v denominators. DecayError when vc <= |a|+|b|;
// SingularityError when the origin exponent is not integrable.
QuadratureResult integrate(const IntegralSpec& spec, double tol = 1e-10);

// The elementary closed form catalogued for the family (log-Gamma space);
// DomainError when the catalogue has no form for the spec (e.g. the
// sinh*cosh/cosh^v family away from v = 1).
double closed_form(const IntegralSpec& spec);

struct SeriesForm {
    double prefactor = 0;
    series::HypergeometricSpec spec;
};

// The pFq form of the integral: value = prefactor * pFq(z). Conjugate-pair
// parameters appear when the discriminant a^2 - b^2 turns negative.
SeriesForm series_form(const IntegralSpec& spec);

}  // namespace hypersum::quad
