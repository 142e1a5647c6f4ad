#include "hypersum/quad.hpp"

#include <cmath>
#include <functional>

#include "hypersum/gauss_kronrod.hpp"
#include "hypersum/specfun.hpp"

namespace hypersum::quad {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool sinh_denominator(Family f) {
    return f == Family::SinhSinhOverSinhV || f == Family::SinhCoshOverSinhV ||
           f == Family::CoshCoshOverSinhV;
}

// number of sinh factors in the numerator; the origin exponent is
// (#sinh - v) for sinh^v denominators
int numerator_sinh_count(Family f) {
    switch (f) {
        case Family::SinhSinhOverCoshV:
        case Family::SinhSinhOverSinhV: return 2;
        case Family::SinhCoshOverCoshV:
        case Family::SinhCoshOverSinhV: return 1;
        default: return 0;
    }
}

double integrand(const IntegralSpec& s, double x) {
    if (s.family == Family::CosOverCoshPi)
        return std::cos(2.0 * s.a * x) / std::cosh(kPi * x);
    // leading power near the origin, avoiding denominator underflow when the
    // adaptive refinement descends very close to a sinh^-v singularity
    if (sinh_denominator(s.family) && x * std::max({s.a, s.b, s.c, 1.0}) < 1e-8) {
        double coeff = 1.0;
        int sinh_powers = numerator_sinh_count(s.family);
        if (sinh_powers >= 1) coeff *= s.a;
        if (sinh_powers == 2) coeff *= s.b;
        return coeff * std::pow(s.c, -s.v) * std::pow(x, sinh_powers - s.v);
    }
    double num = 1.0;
    switch (s.family) {
        case Family::SinhSinhOverCoshV:
        case Family::SinhSinhOverSinhV:
            num = std::sinh(s.a * x) * std::sinh(s.b * x);
            break;
        case Family::SinhCoshOverCoshV:
        case Family::SinhCoshOverSinhV:
            num = std::sinh(s.a * x) * std::cosh(s.b * x);
            break;
        default:
            num = std::cosh(s.a * x) * std::cosh(s.b * x);
            break;
    }
    const double den = sinh_denominator(s.family) ? std::sinh(s.c * x) : std::cosh(s.c * x);
    return num * std::pow(den, -s.v);
}

void validate(const IntegralSpec& s) {
    if (s.family == Family::CosOverCoshPi) return;
    if (!(s.c > 0.0) || !(s.v > 0.0))
        throw DomainError("integrate: requires c > 0 and v > 0");
    const double mu = s.v * s.c - std::fabs(s.a) - std::fabs(s.b);
    if (!(mu > 0.0)) throw DecayError("integrate: decay condition vc > |a|+|b| fails");
    if (sinh_denominator(s.family)) {
        const int k = numerator_sinh_count(s.family);
        if (!(s.v < static_cast<double>(k) + 1.0))
            throw SingularityError("integrate: origin exponent not integrable");
    }
}

// int_0^x0 of the integrand's origin expansion A x^p (1 + e2 x^2 + O(x^4));
// the numeric panels then start on the regular side of the singularity
double origin_head(const IntegralSpec& s, double x0) {
    const int k = numerator_sinh_count(s.family);
    double lead = std::pow(s.c, -s.v);
    if (k >= 1) lead *= s.a;
    if (k == 2) lead *= s.b;
    const double p = k - s.v;
    double e2 = -s.v * s.c * s.c / 6.0;
    switch (s.family) {
        case Family::SinhSinhOverSinhV: e2 += (s.a * s.a + s.b * s.b) / 6.0; break;
        case Family::SinhCoshOverSinhV: e2 += s.a * s.a / 6.0 + s.b * s.b / 2.0; break;
        default: e2 += (s.a * s.a + s.b * s.b) / 2.0; break;
    }
    return lead * (std::pow(x0, p + 1) / (p + 1) + e2 * std::pow(x0, p + 3) / (p + 3));
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::SinhSinhOverCoshV: return "sinh_sinh_over_cosh_v";
        case Family::SinhSinhOverSinhV: return "sinh_sinh_over_sinh_v";
        case Family::SinhCoshOverCoshV: return "sinh_cosh_over_cosh_v";
        case Family::SinhCoshOverSinhV: return "sinh_cosh_over_sinh_v";
        case Family::CoshCoshOverCoshV: return "cosh_cosh_over_cosh_v";
        case Family::CoshCoshOverSinhV: return "cosh_cosh_over_sinh_v";
        case Family::CosOverCoshPi: return "cos_over_cosh_pi";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::SinhSinhOverCoshV, Family::SinhSinhOverSinhV,
                     Family::SinhCoshOverCoshV, Family::SinhCoshOverSinhV,
                     Family::CoshCoshOverCoshV, Family::CoshCoshOverSinhV,
                     Family::CosOverCoshPi}) {
        if (name == family_name(f)) return f;
    }
    throw DomainError("unknown integrand family: " + name);
}

QuadratureResult integrate(const IntegralSpec& spec, double tol) {
    validate(spec);
    QuadratureResult out;

    double mu, bound;
    if (spec.family == Family::CosOverCoshPi) {
        mu = kPi;
        bound = 2.0;
    } else {
        mu = spec.v * spec.c - std::fabs(spec.a) - std::fabs(spec.b);
        bound = std::pow(2.4, spec.v);  // sinh(cx) >= e^{cx}/2.4 for cx >= 1
    }
    // tail bound: int_X^inf <= bound e^{-mu X} / mu < tol/10
    double X = std::log(10.0 * bound / (tol * mu)) / mu;
    X = std::max(X, 1.0 / (spec.family == Family::CosOverCoshPi ? 1.0 : spec.c));
    out.truncation_point = X;

    auto f = [&](double x) { return integrand(spec, x); };

    // sinh^-v origins: an analytically integrated head piece, then the x=u^2
    // substitution flattening the remaining endpoint curvature
    double lo = 0.0;
    if (sinh_denominator(spec.family)) {
        const double x0 = std::min(1e-4, 1e-2 / std::max({spec.a, spec.b, spec.c, 1.0}));
        out.value += origin_head(spec, x0);
        lo = x0;
    }
    const bool substitute_origin =
        sinh_denominator(spec.family) &&
        (spec.family == Family::CoshCoshOverSinhV || spec.v >= 1.0);

    if (substitute_origin) {
        const double split = std::min(1.0, X);
        auto g = [&](double u) { return 2.0 * u * integrand(spec, u * u); };
        auto left = quadcore::integrate_adaptive(g, std::sqrt(lo), std::sqrt(split), 0.5 * tol);
        out.value += left.value;
        out.abs_error_estimate = left.abs_error;
        out.evaluations = left.evaluations;
        if (split < X) {
            auto right = quadcore::integrate_adaptive(f, split, X, 0.5 * tol);
            out.value += right.value;
            out.abs_error_estimate += right.abs_error;
            out.evaluations += right.evaluations;
        }
    } else {
        auto r = quadcore::integrate_adaptive(f, lo, X, 0.9 * tol);
        out.value += r.value;
        out.abs_error_estimate = r.abs_error;
        out.evaluations = r.evaluations;
    }
    out.abs_error_estimate += bound * std::exp(-mu * X) / mu;
    return out;
}

namespace {

using specfun::log_gamma;

// 2^{v-3}/(c Gamma(v)) [ G(w++)G(w--) wplus - G(w+-)G(w-+) wminus ] with the
// trig weights of the product-formula catalogue
double gamma_bracket(const IntegralSpec& s, double weight_pp, double weight_pm,
                     double sign_second) {
    const double lg_v = log_gamma(s.v);
    const double scale = std::exp((s.v - 3.0) * std::log(2.0) - lg_v) / s.c;
    const double wpp = (s.v * s.c + s.a + s.b) / (2.0 * s.c);
    const double wmm = (s.v * s.c - s.a - s.b) / (2.0 * s.c);
    const double wpm = (s.v * s.c + s.a - s.b) / (2.0 * s.c);
    const double wmp = (s.v * s.c - s.a + s.b) / (2.0 * s.c);
    const double first = std::exp(log_gamma(wpp) + log_gamma(wmm)) * weight_pp;
    const double second = std::exp(log_gamma(wpm) + log_gamma(wmp)) * weight_pm;
    return scale * (first + sign_second * second);
}

bool near_odd_integer(double x, double margin) {
    const double r = 2.0 * std::round((x - 1.0) / 2.0) + 1.0;
    return std::fabs(x - r) < margin;
}

bool near_even_integer(double x, double margin) {
    const double r = 2.0 * std::round(x / 2.0);
    return std::fabs(x - r) < margin;
}

}  // namespace

double closed_form(const IntegralSpec& s) {
    validate(s);
    const double margin = 0.02;
    switch (s.family) {
        case Family::SinhSinhOverCoshV: {
            if (!(s.v < 4.0)) throw DomainError("closed_form: needs v < 4");
            return gamma_bracket(s, 1.0, 1.0, -1.0);
        }
        case Family::SinhSinhOverSinhV: {
            if (!(s.v < 3.0)) throw DomainError("closed_form: needs v < 3");
            if (near_odd_integer(s.v, margin))
                throw DomainError("closed_form: cos(v pi/2) vanishes");
            const double cw = std::cos(s.v * kPi / 2.0);
            return gamma_bracket(s, std::cos((s.a + s.b) * kPi / (2.0 * s.c)) / cw,
                                 std::cos((s.a - s.b) * kPi / (2.0 * s.c)) / cw, -1.0);
        }
        case Family::SinhCoshOverCoshV: {
            // catalogued elementary form exists only at v = 1
            if (std::fabs(s.v - 1.0) > 1e-12)
                throw DomainError("closed_form: sinh*cosh/cosh^v only at v = 1");
            const double denom = std::cos(s.b * kPi / s.c) + std::cos(s.a * kPi / s.c);
            if (std::fabs(denom) < margin)
                throw DomainError("closed_form: cosine-sum denominator vanishes");
            return (kPi / s.c) * std::cos(s.a * kPi / (2.0 * s.c)) *
                       std::cos(s.b * kPi / (2.0 * s.c)) / denom -
                   (specfun::lowercase_beta((s.a + s.c + s.b) / (2.0 * s.c)) +
                    specfun::lowercase_beta((s.a + s.c - s.b) / (2.0 * s.c))) /
                       (2.0 * s.c);
        }
        case Family::SinhCoshOverSinhV: {
            if (!(s.v < 2.0)) throw DomainError("closed_form: needs v < 2");
            if (near_even_integer(s.v, margin))
                throw DomainError("closed_form: sin(v pi/2) vanishes");
            const double sw = std::sin(s.v * kPi / 2.0);
            return gamma_bracket(s, std::sin((s.a + s.b) * kPi / (2.0 * s.c)) / sw,
                                 std::sin((s.a - s.b) * kPi / (2.0 * s.c)) / sw, 1.0);
        }
        case Family::CoshCoshOverCoshV: {
            if (!(s.v < 2.0)) throw DomainError("closed_form: needs v < 2");
            return gamma_bracket(s, 1.0, 1.0, 1.0);
        }
        case Family::CoshCoshOverSinhV: {
            if (!(s.v < 1.0)) throw DomainError("closed_form: needs v < 1");
            if (near_odd_integer(s.v, margin))
                throw DomainError("closed_form: cos(v pi/2) vanishes");
            const double cw = std::cos(s.v * kPi / 2.0);
            return gamma_bracket(s, std::cos((s.a + s.b) * kPi / (2.0 * s.c)) / cw,
                                 std::cos((s.a - s.b) * kPi / (2.0 * s.c)) / cw, 1.0);
        }
        case Family::CosOverCoshPi:
            return 0.5 / std::cosh(s.a);
    }
    throw DomainError("closed_form: unknown family");
}

SeriesForm series_form(const IntegralSpec& s) {
    validate(s);
    using series::ParamEntry;

    if (s.family == Family::CosOverCoshPi)
        throw DomainError("series_form: no pFq form for the oscillatory family");

    const double a = s.a, b = s.b, c = s.c, v = s.v;
    const double denom = (v * c - a - b) * (v * c + a + b) * (v * c - a + b) * (v * c + a - b);
    const double s3 = v / 2 - a / (2 * c) - b / (2 * c);
    const double s4 = v / 2 - a / (2 * c) + b / (2 * c);
    const double s5 = v / 2 + a / (2 * c) + b / (2 * c);
    const double s6 = v / 2 + a / (2 * c) - b / (2 * c);

    SeriesForm out;
    out.spec.z = sinh_denominator(s.family) ? 1.0 : -1.0;

    const double vcap[2] = {4.0, 3.0};  // cosh^v / sinh^v caps for sinh*sinh
    switch (s.family) {
        case Family::SinhSinhOverCoshV:
        case Family::SinhSinhOverSinhV: {
            const double cap = vcap[s.family == Family::SinhSinhOverSinhV ? 1 : 0];
            if (!(v < cap)) throw DomainError("series_form: v out of the theorem range");
            out.prefactor = std::pow(2.0, v + 1.0) * v * a * b * c / denom;
            out.spec.numerators = {ParamEntry::real(v), ParamEntry::real(1 + v / 2),
                                   ParamEntry::real(s3), ParamEntry::real(s5),
                                   ParamEntry::real(s4), ParamEntry::real(s6)};
            out.spec.denominators = {ParamEntry::real(v / 2), ParamEntry::real(1 + s3),
                                     ParamEntry::real(1 + s5), ParamEntry::real(1 + s4),
                                     ParamEntry::real(1 + s6)};
            return out;
        }
        case Family::SinhCoshOverCoshV:
        case Family::SinhCoshOverSinhV: {
            const double cap = s.family == Family::SinhCoshOverSinhV ? 2.0 : 3.0;
            if (!(v < cap)) throw DomainError("series_form: v out of the theorem range");
            out.prefactor = std::pow(2.0, v) * (v * v * a * c * c - a * a * a + a * b * b) / denom;
            const double disc = a * a - b * b;
            ParamEntry sig1, sig2, sig1p, sig2p;  // sigma pair and its +1 shift
            if (disc >= 0.0) {
                const double r = std::sqrt(disc) / (2 * c);
                sig1 = ParamEntry::real(v / 2 - r);
                sig2 = ParamEntry::real(v / 2 + r);
                sig1p = ParamEntry::real(1 + v / 2 - r);
                sig2p = ParamEntry::real(1 + v / 2 + r);
                out.spec.numerators = {ParamEntry::real(v), sig1p, sig2p,
                                       ParamEntry::real(s3), ParamEntry::real(s4),
                                       ParamEntry::real(s5), ParamEntry::real(s6)};
                out.spec.denominators = {sig1, sig2, ParamEntry::real(1 + s3),
                                         ParamEntry::real(1 + s4), ParamEntry::real(1 + s5),
                                         ParamEntry::real(1 + s6)};
            } else {
                const double im = std::sqrt(-disc) / (2 * c);
                out.spec.numerators = {ParamEntry::real(v), ParamEntry::pair(1 + v / 2, im),
                                       ParamEntry::real(s3), ParamEntry::real(s4),
                                       ParamEntry::real(s5), ParamEntry::real(s6)};
                out.spec.denominators = {ParamEntry::pair(v / 2, im), ParamEntry::real(1 + s3),
                                         ParamEntry::real(1 + s4), ParamEntry::real(1 + s5),
                                         ParamEntry::real(1 + s6)};
            }
            return out;
        }
        case Family::CoshCoshOverCoshV:
        case Family::CoshCoshOverSinhV: {
            const double cap = s.family == Family::CoshCoshOverSinhV ? 1.0 : 2.0;
            if (!(v < cap)) throw DomainError("series_form: v out of the theorem range");
            out.prefactor = std::pow(2.0, v) * (v * v * v * c * c * c - a * a * v * c - b * b * v * c) / denom;
            const double r = std::sqrt(a * a + b * b) / (2 * c);
            out.spec.numerators = {ParamEntry::real(v), ParamEntry::real(1 + v / 2),
                                   ParamEntry::real(1 + v / 2 - r), ParamEntry::real(1 + v / 2 + r),
                                   ParamEntry::real(s3), ParamEntry::real(s4),
                                   ParamEntry::real(s5), ParamEntry::real(s6)};
            out.spec.denominators = {ParamEntry::real(v / 2), ParamEntry::real(v / 2 - r),
                                     ParamEntry::real(v / 2 + r), ParamEntry::real(1 + s3),
                                     ParamEntry::real(1 + s4), ParamEntry::real(1 + s5),
                                     ParamEntry::real(1 + s6)};
            return out;
        }
        default:
            throw DomainError("series_form: unknown family");
    }
}

}  // namespace hypersum::quad
