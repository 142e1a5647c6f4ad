#include "hypersum/identities.hpp"

#include <cmath>
#include <initializer_list>

#include "hypersum/gauss_kronrod.hpp"
#include "hypersum/specfun.hpp"

namespace hypersum::identities {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kMargin = 0.02;  // pole-guard distance from excluded hyperplanes

using series::HypergeometricSpec;
using series::ParamEntry;
using specfun::digamma;
using specfun::log_gamma_signed;
using specfun::lowercase_beta;

double req(const std::optional<double>& f, const char* name) {
    if (!f) throw DomainError(std::string("check: parameter '") + name + "' not set");
    return *f;
}

bool away_from_nonpos_int(double y) {
    const double r = std::round(y);
    return !(r <= 0.0 && std::fabs(y - r) < kMargin);
}

bool away_from_odd_int(double y) {
    const double r = 2.0 * std::round((y - 1.0) / 2.0) + 1.0;
    return std::fabs(y - r) >= kMargin;
}

// product of Gamma factors evaluated in log space with sign tracking
double gamma_ratio(std::initializer_list<double> nums, std::initializer_list<double> dens) {
    double lg = 0.0;
    int sign = 1;
    int s = 1;
    for (double y : nums) {
        lg += log_gamma_signed(y, s);
        sign *= s;
    }
    for (double y : dens) {
        lg -= log_gamma_signed(y, s);
        sign *= s;
    }
    return sign * std::exp(lg);
}

RecipeOutput eval_pfq(const HypergeometricSpec& spec, const EvalContext& ctx) {
    auto r = series::eval_series(spec, ctx.series_tol, ctx.max_terms);
    return {r.value, r.terms_used, r.accelerated};
}

Recipe pfq_recipe(std::function<HypergeometricSpec(const ParamPoint&)> build) {
    return [build](const ParamPoint& p, const EvalContext& ctx) {
        return eval_pfq(build(p), ctx);
    };
}

Recipe scalar_recipe(std::function<double(const ParamPoint&)> f) {
    return [f](const ParamPoint& p, const EvalContext&) {
        return RecipeOutput{f(p), 0, false};
    };
}

// --- the sigma/lambda frames shared by the hyperbolic-integral theorems ---

HypergeometricSpec frame_6f5(double v, double a, double b, double c, double z) {
    const double s3 = v / 2 - (a + b) / (2 * c);
    const double s5 = v / 2 + (a + b) / (2 * c);
    const double s4 = v / 2 - (a - b) / (2 * c);
    const double s6 = v / 2 + (a - b) / (2 * c);
    HypergeometricSpec spec;
    spec.numerators = {ParamEntry::real(v),      ParamEntry::real(1 + v / 2),
                       ParamEntry::real(s3),     ParamEntry::real(s5),
                       ParamEntry::real(s4),     ParamEntry::real(s6)};
    spec.denominators = {ParamEntry::real(v / 2),  ParamEntry::real(1 + s3),
                         ParamEntry::real(1 + s5), ParamEntry::real(1 + s4),
                         ParamEntry::real(1 + s6)};
    spec.z = z;
    return spec;
}

HypergeometricSpec frame_7f6(double v, double a, double b, double c, double z) {
    const double s3 = v / 2 - (a + b) / (2 * c);
    const double s5 = v / 2 + (a + b) / (2 * c);
    const double s4 = v / 2 - (a - b) / (2 * c);
    const double s6 = v / 2 + (a - b) / (2 * c);
    const double disc = a * a - b * b;
    HypergeometricSpec spec;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc) / (2 * c);
        spec.numerators = {ParamEntry::real(v),
                           ParamEntry::real(1 + v / 2 - r), ParamEntry::real(1 + v / 2 + r),
                           ParamEntry::real(s3), ParamEntry::real(s4),
                           ParamEntry::real(s5), ParamEntry::real(s6)};
        spec.denominators = {ParamEntry::real(v / 2 - r), ParamEntry::real(v / 2 + r),
                             ParamEntry::real(1 + s3), ParamEntry::real(1 + s4),
                             ParamEntry::real(1 + s5), ParamEntry::real(1 + s6)};
    } else {
        const double im = std::sqrt(-disc) / (2 * c);
        spec.numerators = {ParamEntry::real(v), ParamEntry::pair(1 + v / 2, im),
                           ParamEntry::real(s3), ParamEntry::real(s4),
                           ParamEntry::real(s5), ParamEntry::real(s6)};
        spec.denominators = {ParamEntry::pair(v / 2, im),
                             ParamEntry::real(1 + s3), ParamEntry::real(1 + s4),
                             ParamEntry::real(1 + s5), ParamEntry::real(1 + s6)};
    }
    spec.z = z;
    return spec;
}

HypergeometricSpec frame_8f7(double v, double a, double b, double c, double z) {
    const double s3 = v / 2 - (a + b) / (2 * c);
    const double s5 = v / 2 + (a + b) / (2 * c);
    const double s4 = v / 2 - (a - b) / (2 * c);
    const double s6 = v / 2 + (a - b) / (2 * c);
    const double r = std::sqrt(a * a + b * b) / (2 * c);
    HypergeometricSpec spec;
    spec.numerators = {ParamEntry::real(v), ParamEntry::real(1 + v / 2),
                       ParamEntry::real(1 + v / 2 - r), ParamEntry::real(1 + v / 2 + r),
                       ParamEntry::real(s3), ParamEntry::real(s4),
                       ParamEntry::real(s5), ParamEntry::real(s6)};
    spec.denominators = {ParamEntry::real(v / 2), ParamEntry::real(v / 2 - r),
                         ParamEntry::real(v / 2 + r), ParamEntry::real(1 + s3),
                         ParamEntry::real(1 + s4), ParamEntry::real(1 + s5),
                         ParamEntry::real(1 + s6)};
    spec.z = z;
    return spec;
}

// all four vc +/- a +/- b exceed the margin
bool decay_ok(double v, double a, double b, double c, double margin) {
    const double vc = v * c;
    return vc - a - b > margin && vc + a + b > margin && vc - a + b > margin &&
           vc + a - b > margin;
}

double quad4(double v, double a, double b, double c) {
    const double vc = v * c;
    return (vc * vc - (a + b) * (a + b)) * (vc * vc - (a - b) * (a - b));
}

double quad4_half(double a, double b, double c) {
    // (b-a-c)(b+a+c)(b-a+c)(b+a-c) for the v=1 half-integer frames
    return (b - a - c) * (b + a + c) * (b - a + c) * (b + a - c);
}

// Gamma-product bracket of the v-frame theorems:
// G((vc+a+b)/2c) G((vc-a-b)/2c) w1  +  sign * G((vc+a-b)/2c) G((vc-a+b)/2c) w2
double vframe_bracket(double v, double a, double b, double c, double w1, double w2,
                      double sign) {
    const double wpp = (v * c + a + b) / (2 * c);
    const double wmm = (v * c - a - b) / (2 * c);
    const double wpm = (v * c + a - b) / (2 * c);
    const double wmp = (v * c - a + b) / (2 * c);
    return gamma_ratio({wpp, wmm}, {}) * w1 + sign * gamma_ratio({wpm, wmp}, {}) * w2;
}

double cos_sum_denom(double a, double c, double b) {
    // cos(c pi / b) + cos(a pi / b)
    return std::cos(c * kPi / b) + std::cos(a * kPi / b);
}

std::vector<double> red2_weights(double v, double a, double b, double c) {
    return {(v * c - a - b) / (2 * c), (v * c + a + b) / (2 * c),
            (v * c - a + b) / (2 * c), (v * c + a - b) / (2 * c)};
}

std::vector<Identity> build_registry() {
    std::vector<Identity> reg;
    auto add = [&](Identity ident) { reg.push_back(std::move(ident)); };

    // ---------------- classical theorems ----------------

    add({.id = "dixon_3f2",
         .provenance = "Dixon's theorem: well-poised 3F2 at unit argument",
         .variables = {"a", "b", "c"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return a - 2 * b - 2 * c > -2 + 0.05 &&
                    away_from_nonpos_int(1 + a - b) && away_from_nonpos_int(1 + a - c) &&
                    away_from_nonpos_int(1 + a / 2) && away_from_nonpos_int(1 + a / 2 - b - c) &&
                    away_from_nonpos_int(1 + a / 2 - b) && away_from_nonpos_int(1 + a / 2 - c) &&
                    away_from_nonpos_int(1 + a) && away_from_nonpos_int(1 + a - b - c);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return series::make_pfq({a, b, c}, {1 + a - b, 1 + a - c}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return gamma_ratio({1 + a - b, 1 + a - c, 1 + a / 2, 1 + a / 2 - b - c},
                                {1 + a / 2 - b, 1 + a / 2 - c, 1 + a, 1 + a - b - c});
         })});

    add({.id = "vanishing_3f2",
         .provenance = "vanishing well-poised 3F2(1) (Dixon specialization c = 1 + a/2)",
         .variables = {"a", "b"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return b < -0.05 && away_from_nonpos_int(a / 2) && away_from_nonpos_int(1 + a - b);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return series::make_pfq({a, 1 + a / 2, b}, {a / 2, 1 + a - b}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint&) { return 0.0; })});

    add({.id = "kummer_type_3f2_neg1",
         .provenance = "well-poised 3F2(-1) summation with Gamma-ratio value",
         .variables = {"a", "b"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return b < 0.5 - 0.05 && away_from_nonpos_int(a / 2) &&
                    away_from_nonpos_int(1 + a - b) &&
                    away_from_nonpos_int((1 + a) / 2) &&
                    away_from_nonpos_int((1 + a) / 2 - b) && away_from_nonpos_int(1 + a) &&
                    -2 * b > -1 + 0.1;  // z=-1 convergence strip
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return series::make_pfq({a, 1 + a / 2, b}, {a / 2, 1 + a - b}, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return gamma_ratio({1 + a - b, (1 + a) / 2}, {(1 + a) / 2 - b, 1 + a});
         })});

    add({.id = "split_3f2_two_2f1",
         .provenance = "contiguous-relation split of 3F2 into two 2F1 terms",
         .variables = {"a", "b", "c", "z"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c, z = *p.z;
             const bool z_ok = std::fabs(z + 1.0) < 1e-12 || std::fabs(z - 0.5) < 1e-12;
             return z_ok && std::fabs(c - b) >= kMargin && a < 1.9 &&
                    away_from_nonpos_int(1 + b) && away_from_nonpos_int(1 + c);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return series::make_pfq({*p.a, *p.b, *p.c}, {1 + *p.b, 1 + *p.c}, *p.z);
         }),
         .rhs = [](const ParamPoint& p, const EvalContext& ctx) {
             const double a = *p.a, b = *p.b, c = *p.c, z = *p.z;
             auto f1 = eval_pfq(series::make_pfq({a, b}, {1 + b}, z), ctx);
             auto f2 = eval_pfq(series::make_pfq({a, c}, {1 + c}, z), ctx);
             return RecipeOutput{(c / (c - b)) * f1.value - (b / (c - b)) * f2.value,
                                 std::max(f1.terms, f2.terms),
                                 f1.accelerated || f2.accelerated};
         }});

    add({.id = "gauss_combined_3f2_1",
         .provenance = "3F2(1) with contiguous denominators via the Gauss summation",
         .variables = {"a", "b", "c"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return a < 1 - 0.05 && std::fabs(c - b) >= kMargin && b > 0.05 && c > 0.05 &&
                    away_from_nonpos_int(1 + b - a) && away_from_nonpos_int(1 + c - a);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return series::make_pfq({*p.a, *p.b, *p.c}, {1 + *p.b, 1 + *p.c}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             const double t1 = gamma_ratio({1 - a, b}, {1 + b - a});
             const double t2 = gamma_ratio({1 - a, c}, {1 + c - a});
             return b * c / (c - b) * (t1 - t2);
         })});

    add({.id = "classical_4f3_neg1",
         .provenance = "classical well-poised 4F3(-1) summation",
         .variables = {"a", "c", "d"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d;
             return a - 2 * c - 2 * d > -2 + 0.1 && away_from_nonpos_int(a / 2) &&
                    away_from_nonpos_int(1 + a - c) && away_from_nonpos_int(1 + a - d) &&
                    away_from_nonpos_int(1 + a) && away_from_nonpos_int(1 + a - c - d);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d;
             return series::make_pfq({a, 1 + a / 2, c, d}, {a / 2, 1 + a - c, 1 + a - d}, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d;
             return gamma_ratio({1 + a - c, 1 + a - d}, {1 + a, 1 + a - c - d});
         })});

    add({.id = "classical_4f3_pos1",
         .provenance = "classical well-poised 4F3(+1) summation",
         .variables = {"a", "c", "d"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d;
             return 2 * c + 2 * d - a < 1 - 0.05 && away_from_nonpos_int(a / 2) &&
                    away_from_nonpos_int(1 + a - c) && away_from_nonpos_int(1 + a - d) &&
                    away_from_nonpos_int((1 + a) / 2) &&
                    away_from_nonpos_int((1 + a) / 2 - c - d) &&
                    away_from_nonpos_int((1 + a) / 2 - c) &&
                    away_from_nonpos_int((1 + a) / 2 - d) && away_from_nonpos_int(1 + a) &&
                    away_from_nonpos_int(1 + a - c - d);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d;
             return series::make_pfq({a, 1 + a / 2, c, d}, {a / 2, 1 + a - c, 1 + a - d}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d;
             return gamma_ratio(
                 {1 + a - c, 1 + a - d, (1 + a) / 2, (1 + a) / 2 - c - d},
                 {1 + a, (1 + a) / 2 - d, (1 + a) / 2 - c, 1 + a - c - d});
         })});

    add({.id = "classical_5f4_pos1",
         .provenance = "classical well-poised 5F4(+1) summation",
         .variables = {"a", "c", "d", "e"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d, e = *p.e;
             return a - c - d - e > -1 + 0.05 && away_from_nonpos_int(a / 2) &&
                    away_from_nonpos_int(1 + a - c) && away_from_nonpos_int(1 + a - d) &&
                    away_from_nonpos_int(1 + a - e) &&
                    away_from_nonpos_int(1 + a - c - d - e) &&
                    away_from_nonpos_int(1 + a - d - e) &&
                    away_from_nonpos_int(1 + a - c - e) &&
                    away_from_nonpos_int(1 + a - c - d) && away_from_nonpos_int(1 + a);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d, e = *p.e;
             return series::make_pfq({a, 1 + a / 2, c, d, e},
                                     {a / 2, 1 + a - c, 1 + a - d, 1 + a - e}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, c = *p.c, d = *p.d, e = *p.e;
             return gamma_ratio({1 + a - c, 1 + a - d, 1 + a - e, 1 + a - c - d - e},
                                {1 + a, 1 + a - d - e, 1 + a - c - e, 1 + a - c - d});
         })});

    add({.id = "trigamma_3f2",
         .provenance = "3F2(1) value of the trigamma function",
         .variables = {"x"},
         .domain = [](const ParamPoint& p) { return *p.x > 0.05; },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double x = *p.x;
             return series::make_pfq({1, x, x}, {1 + x, 1 + x}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             return (*p.x) * (*p.x) * specfun::trigamma(*p.x);
         })});

    add({.id = "digamma_diff_3f2",
         .provenance = "3F2(1) as a digamma difference quotient",
         .variables = {"a", "b"},
         .domain = [](const ParamPoint& p) {
             return *p.a > 0.05 && *p.b > 0.05 && std::fabs(*p.b - *p.a) >= kMargin;
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return series::make_pfq({1, a, b}, {1 + a, 1 + b}, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return a * b / (b - a) * (digamma(b) - digamma(a));
         })});

    add({.id = "beta_diff_3f2_neg1",
         .provenance = "3F2(-1) as a lowercase-beta difference quotient",
         .variables = {"a", "b"},
         .domain = [](const ParamPoint& p) {
             return *p.a > 0.05 && *p.b > 0.05 && std::fabs(*p.b - *p.a) >= kMargin;
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return series::make_pfq({1, a, b}, {1 + a, 1 + b}, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return a * b / (b - a) * (lowercase_beta(a) - lowercase_beta(b));
         })});

    add({.id = "beta_derivative_3f2_neg1",
         .provenance = "3F2(-1) as the lowercase-beta derivative",
         .variables = {"x"},
         .domain = [](const ParamPoint& p) { return *p.x > 0.05; },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double x = *p.x;
             return series::make_pfq({1, x, x}, {1 + x, 1 + x}, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double x = *p.x;
             return -x * x * specfun::lowercase_beta_derivative(x);
         })});

    // ---------------- trigonometric hypergeometric forms ----------------

    auto trig_domain = [](const ParamPoint& p) {
        const double z = *p.z;
        const double half_odd = kPi / 2 + kPi * std::round((std::fabs(z) - kPi / 2) / kPi);
        return std::fabs(std::fabs(z) - half_odd) >= 0.05;
    };

    add({.id = "tan_form",
         .provenance = "hypergeometric 3F2(1) form of tan",
         .variables = {"z"},
         .domain = trig_domain,
         .lhs = [](const ParamPoint& p, const EvalContext& ctx) {
             const double z = *p.z;
             auto f = eval_pfq(series::make_pfq({1, 0.5 + z / kPi, 0.5 - z / kPi},
                                                {1.5 + z / kPi, 1.5 - z / kPi}, 1.0),
                               ctx);
             f.value *= 8 * z / (kPi * kPi - 4 * z * z);
             return f;
         },
         .rhs = scalar_recipe([](const ParamPoint& p) { return std::tan(*p.z); })});

    add({.id = "sec_form",
         .provenance = "hypergeometric 4F3(-1) form of sec",
         .variables = {"z"},
         .domain = trig_domain,
         .lhs = [](const ParamPoint& p, const EvalContext& ctx) {
             const double z = *p.z;
             auto f = eval_pfq(series::make_pfq({1, 1.5, 0.5 + z / kPi, 0.5 - z / kPi},
                                                {0.5, 1.5 + z / kPi, 1.5 - z / kPi}, -1.0),
                               ctx);
             f.value *= 4 * kPi / (kPi * kPi - 4 * z * z);
             return f;
         },
         .rhs = scalar_recipe([](const ParamPoint& p) { return 1.0 / std::cos(*p.z); })});

    add({.id = "sec_squared_form",
         .provenance = "hypergeometric sum of two 3F2(1) terms equal to sec^2",
         .variables = {"z"},
         .domain = trig_domain,
         .lhs = [](const ParamPoint& p, const EvalContext& ctx) {
             const double z = *p.z;
             auto fm = eval_pfq(series::make_pfq({1, 0.5 - z / kPi, 0.5 - z / kPi},
                                                 {1.5 - z / kPi, 1.5 - z / kPi}, 1.0),
                                ctx);
             auto fp = eval_pfq(series::make_pfq({1, 0.5 + z / kPi, 0.5 + z / kPi},
                                                 {1.5 + z / kPi, 1.5 + z / kPi}, 1.0),
                                ctx);
             const double lo = 2 * z - kPi, hi = 2 * z + kPi;
             return RecipeOutput{4 / (lo * lo) * fm.value + 4 / (hi * hi) * fp.value,
                                 std::max(fm.terms, fp.terms),
                                 fm.accelerated || fp.accelerated};
         },
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double c = std::cos(*p.z);
             return 1.0 / (c * c);
         })});

    add({.id = "incomplete_beta_2f1",
         .provenance = "2F1 in terms of the incomplete beta function",
         .variables = {"a", "b", "z"},
         .domain = [](const ParamPoint& p) {
             return *p.z > 0.05 && *p.z < 0.95 && *p.b > 0.05;
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return series::make_pfq({*p.a, *p.b}, {1 + *p.b}, *p.z);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, z = *p.z;
             return b * std::pow(z, -b) * specfun::incomplete_beta(z, b, 1 - a);
         })});

    // ---------------- new summation theorems ----------------

    auto vframe_domain = [](double v_cap) {
        return [v_cap](const ParamPoint& p) {
            const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
            return v > 0.05 && v < v_cap - 0.05 && c > 0.05 && a > 0.05 && b > 0.05 &&
                   decay_ok(v, a, b, c, 0.05);
        };
    };

    add({.id = "thm1",
         .provenance = "summation theorem: 6F5(-1) with Gamma-difference value",
         .variables = {"v", "a", "b", "c"},
         .domain = vframe_domain(4.0),
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_6f5(*p.v, *p.a, *p.b, *p.c, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const double pref = quad4(v, a, b, c) /
                                 (16 * v * a * b * c * c * std::exp(specfun::log_gamma(v)));
             return pref * vframe_bracket(v, a, b, c, 1.0, 1.0, -1.0);
         }),
         .series_omega = [](const ParamPoint& p) { return 3.0 - *p.v; },
         .exclude_nonpositive_omega = true});

    add({.id = "thm2",
         .provenance = "summation theorem: 6F5(+1) with cosine-weighted Gamma value",
         .variables = {"v", "a", "b", "c"},
         .domain = [dom = vframe_domain(3.0)](const ParamPoint& p) {
             return dom(p) && away_from_odd_int(*p.v);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_6f5(*p.v, *p.a, *p.b, *p.c, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const double pref = quad4(v, a, b, c) /
                                 (16 * v * a * b * c * c * std::exp(specfun::log_gamma(v)));
             const double cw = std::cos(v * kPi / 2);
             return pref * vframe_bracket(v, a, b, c,
                                          std::cos((a + b) * kPi / (2 * c)) / cw,
                                          std::cos((a - b) * kPi / (2 * c)) / cw, -1.0);
         })});

    auto half_frame_domain = [](const ParamPoint& p) {
        const double a = *p.a, b = *p.b, c = *p.c;
        return b > 0.05 && a > 0.05 && c > 0.05 && decay_ok(1.0, a, c, b, 0.05) &&
               away_from_odd_int((a + c) / b) && away_from_odd_int((a - c) / b) &&
               std::fabs(cos_sum_denom(a, c, b)) >= kMargin;
    };

    add({.id = "thm3",
         .provenance = "summation theorem: 6F5(-1) with sine-product trigonometric value",
         .variables = {"a", "b", "c"},
         .domain = half_frame_domain,
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_6f5(1.0, *p.a, *p.c, *p.b, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return kPi * quad4_half(a, b, c) / (4 * a * c * b * b) *
                    std::sin(a * kPi / (2 * b)) * std::sin(c * kPi / (2 * b)) /
                    cos_sum_denom(a, c, b);
         })});

    add({.id = "thm4",
         .provenance = "summation theorem: 7F6(+1) with sine-weighted Gamma value",
         .variables = {"v", "a", "b", "c"},
         .domain = [dom = vframe_domain(2.0)](const ParamPoint& p) {
             const double v = *p.v;
             const double r = 2.0 * std::round(v / 2.0);
             return dom(p) && std::fabs(v - r) >= kMargin;  // sin(v pi/2) != 0
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_7f6(*p.v, *p.a, *p.b, *p.c, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const double pref =
                 quad4(v, a, b, c) /
                 (8 * (v * v * a * c * c * c - a * a * a * c + a * b * b * c) *
                  std::exp(specfun::log_gamma(v)));
             const double sw = std::sin(v * kPi / 2);
             return pref * vframe_bracket(v, a, b, c,
                                          std::sin((a + b) * kPi / (2 * c)) / sw,
                                          std::sin((a - b) * kPi / (2 * c)) / sw, 1.0);
         }),
         .pair_regime = [](const ParamPoint& p) { return *p.b > *p.a; }});

    add({.id = "thm5",
         .provenance = "summation theorem: 7F6(+1) with sine-quotient trigonometric value",
         .variables = {"a", "b", "c"},
         .domain = half_frame_domain,
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_7f6(1.0, *p.a, *p.c, *p.b, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return kPi * quad4_half(a, b, c) /
                    (4 * (a * b * b * b - a * a * a * b + a * b * c * c)) *
                    std::sin(a * kPi / b) / cos_sum_denom(a, c, b);
         }),
         .pair_regime = [](const ParamPoint& p) { return *p.c > *p.a; }});

    add({.id = "thm6",
         .provenance = "summation theorem: 7F6(-1) with cosine-quotient and beta terms",
         .variables = {"a", "b", "c"},
         .domain = half_frame_domain,
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_7f6(1.0, *p.a, *p.c, *p.b, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             const double poly = a * b * b * b - a * a * a * b + a * b * c * c;
             return kPi * quad4_half(a, b, c) / (2 * poly) * std::cos(a * kPi / (2 * b)) *
                        std::cos(c * kPi / (2 * b)) / cos_sum_denom(a, c, b) -
                    quad4_half(a, b, c) / (4 * poly) *
                        (lowercase_beta((a + b + c) / (2 * b)) +
                         lowercase_beta((a + b - c) / (2 * b)));
         }),
         .pair_regime = [](const ParamPoint& p) { return *p.c > *p.a; }});

    add({.id = "thm7",
         .provenance = "summation theorem: 8F7(-1) with Gamma-sum value",
         .variables = {"v", "a", "b", "c"},
         .domain = vframe_domain(2.0),
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_8f7(*p.v, *p.a, *p.b, *p.c, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const double pref =
                 quad4(v, a, b, c) /
                 (8 * (v * v * v * c * c * c * c - a * a * v * c * c - b * b * v * c * c) *
                  std::exp(specfun::log_gamma(v)));
             return pref * vframe_bracket(v, a, b, c, 1.0, 1.0, 1.0);
         }),
         .series_omega = [](const ParamPoint& p) { return 1.0 - *p.v; },
         .exclude_nonpositive_omega = true});

    add({.id = "thm8",
         .provenance = "summation theorem: 8F7(+1) with cosine-weighted Gamma-sum value",
         .variables = {"v", "a", "b", "c"},
         .domain = [dom = vframe_domain(1.0)](const ParamPoint& p) {
             return dom(p) && away_from_odd_int(*p.v);
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_8f7(*p.v, *p.a, *p.b, *p.c, 1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const double pref =
                 quad4(v, a, b, c) /
                 (8 * (v * v * v * c * c * c * c - a * a * v * c * c - b * b * v * c * c) *
                  std::exp(specfun::log_gamma(v)));
             const double cw = std::cos(v * kPi / 2);
             return pref * vframe_bracket(v, a, b, c,
                                          std::cos((a + b) * kPi / (2 * c)) / cw,
                                          std::cos((a - b) * kPi / (2 * c)) / cw, 1.0);
         })});

    add({.id = "thm9",
         .provenance = "summation theorem: 8F7(-1) with cosine-quotient trigonometric value",
         .variables = {"a", "b", "c"},
         .domain = [half_frame_domain](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return half_frame_domain(p) &&
                    std::fabs(b * b - a * a - c * c) >= kMargin;
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             return frame_8f7(1.0, *p.a, *p.c, *p.b, -1.0);
         }),
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b, c = *p.c;
             return kPi * quad4_half(a, b, c) /
                    (2 * (b * b * b * b - a * a * b * b - c * c * b * b)) *
                    std::cos(a * kPi / (2 * b)) * std::cos(c * kPi / (2 * b)) /
                    cos_sum_denom(a, c, b);
         }),
         .series_omega = [](const ParamPoint&) { return 0.0; }});

    auto thm10_domain = [](const ParamPoint& p) {
        const double a = *p.a, b = *p.b;
        // b > a > 0 puts a/b in (0,1); the only odd-integer hyperplane nearby is 1
        return b > 0.05 && a > 0.05 && b - a > 0.05 &&
               std::fabs(a / b - 1.0) >= kMargin;
    };
    auto thm10_lhs = pfq_recipe([](const ParamPoint& p) {
        const double r = *p.a / (2 * *p.b);
        return series::make_pfq({1, 0.5 - r, 0.5 + r}, {1.5 - r, 1.5 + r}, -1.0);
    });

    add({.id = "thm10_secbeta",
         .provenance = "summation theorem: 3F2(-1) with secant and lowercase-beta value",
         .variables = {"a", "b"},
         .domain = thm10_domain,
         .lhs = thm10_lhs,
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return (b * b - a * a) / (2 * a * b) *
                    (kPi / 2 / std::cos(kPi * a / (2 * b)) -
                     lowercase_beta((a + b) / (2 * b)));
         })});

    add({.id = "thm10_digamma",
         .provenance = "summation theorem: 3F2(-1) with four-digamma value",
         .variables = {"a", "b"},
         .domain = thm10_domain,
         .lhs = thm10_lhs,
         .rhs = scalar_recipe([](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return (b * b - a * a) / (8 * a * b) *
                    (digamma((3 * b - a) / (4 * b)) - digamma((b - a) / (4 * b)) -
                     digamma((3 * b + a) / (4 * b)) + digamma((b + a) / (4 * b)));
         })});

    // ---------------- reduction formulas ----------------

    add({.id = "red1",
         .provenance = "reduction formula: 4F3(1) proportional to 3F2(1)",
         .variables = {"a", "b"},
         .domain = [](const ParamPoint& p) {
             const double a = *p.a, b = *p.b;
             return b > 0.05 && a > 0.05 && b - a > 0.05 &&
                    std::fabs(a / b - 1.0) >= kMargin;
         },
         .lhs = pfq_recipe([](const ParamPoint& p) {
             const double r = *p.a / (2 * *p.b);
             return series::make_pfq({2, 2, 0.5 + r, 0.5 - r}, {1, 2.5 + r, 2.5 - r}, 1.0);
         }),
         .rhs = [](const ParamPoint& p, const EvalContext& ctx) {
             const double a = *p.a, b = *p.b, r = a / (2 * b);
             auto f = eval_pfq(series::make_pfq({1, 0.5 - r, 0.5 + r}, {1.5 - r, 1.5 + r}, 1.0),
                               ctx);
             f.value *= (9 * b * b - a * a) / (8 * b * b);
             return f;
         }});

    auto red2_domain = [](const ParamPoint& p) {
        const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
        return v > 0.05 && v < 1.95 && c > 0.05 && a > 0.05 && b > 0.05 &&
               decay_ok(v, a, b, c, 0.05);
    };
    auto red2_lhs = pfq_recipe([](const ParamPoint& p) {
        return frame_7f6(*p.v, *p.a, *p.b, *p.c, -1.0);
    });
    auto red2_pref = [](const ParamPoint& p) {
        const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
        return quad4(v, a, b, c) / (4 * (v * v * a * c * c - a * a * a + a * b * b));
    };

    add({.id = "red2",
         .provenance = "reduction formula: 7F6(-1) as a bracket of four 2F1(-1) terms",
         .variables = {"v", "a", "b", "c"},
         .domain = red2_domain,
         .lhs = red2_lhs,
         .rhs = [red2_pref](const ParamPoint& p, const EvalContext& ctx) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const auto w = red2_weights(v, a, b, c);
             const double sgn[4] = {1, -1, 1, -1};
             RecipeOutput out;
             double bracket = 0;
             for (int i = 0; i < 4; ++i) {
                 auto f = eval_pfq(series::make_pfq({v, w[i]}, {1 + w[i]}, -1.0), ctx);
                 bracket += sgn[i] * f.value / (2 * c * w[i]);
                 out.terms = std::max(out.terms, f.terms);
                 out.accelerated = out.accelerated || f.accelerated;
             }
             out.value = red2_pref(p) * bracket;
             return out;
         },
         .tolerance = 1e-7,
         .pair_regime = [](const ParamPoint& p) { return *p.b > *p.a; }});

    add({.id = "red2_integral",
         .provenance = "7F6(-1) reduction with the 2F1(-1) terms by definite integral",
         .variables = {"v", "a", "b", "c"},
         .domain = red2_domain,
         .lhs = red2_lhs,
         .rhs = [red2_pref](const ParamPoint& p, const EvalContext& ctx) {
             const double v = *p.v, a = *p.a, b = *p.b, c = *p.c;
             const auto w = red2_weights(v, a, b, c);
             const double sgn[4] = {1, -1, 1, -1};
             double bracket = 0;
             for (int i = 0; i < 4; ++i) {
                 // 2F1(v, w; 1+w; -1) = w int_0^1 t^(w-1) (1+t)^(-v) dt, with the
                 // t = u^(1/w) substitution flattening the origin
                 const double wi = w[i];
                 auto g = [&](double u) {
                     return std::pow(1.0 + std::pow(u, 1.0 / wi), -v);
                 };
                 const double f21 =
                     quadcore::integrate_adaptive(g, 0.0, 1.0, ctx.quad_tol).value;
                 bracket += sgn[i] * f21 / (2 * c * wi);
             }
             return RecipeOutput{red2_pref(p) * bracket, 0, false};
         },
         .tolerance = 1e-7,
         .pair_regime = [](const ParamPoint& p) { return *p.b > *p.a; }});

    // ---------------- hyperbolic integral triangles ----------------

    struct TriangleDef {
        const char* id;
        quad::Family family;
        const char* provenance;
    };
    const TriangleDef triangles[] = {
        {"triangle_sinh_sinh_cosh", quad::Family::SinhSinhOverCoshV,
         "hyperbolic integral sinh*sinh/cosh^v: quadrature vs 6F5(-1) vs Gamma form"},
        {"triangle_sinh_sinh_sinh", quad::Family::SinhSinhOverSinhV,
         "hyperbolic integral sinh*sinh/sinh^v: quadrature vs 6F5(+1) vs Gamma form"},
        {"triangle_sinh_cosh_cosh", quad::Family::SinhCoshOverCoshV,
         "hyperbolic integral sinh*cosh/cosh^v at v=1: quadrature vs 7F6(-1) vs beta form"},
        {"triangle_sinh_cosh_sinh", quad::Family::SinhCoshOverSinhV,
         "hyperbolic integral sinh*cosh/sinh^v: quadrature vs 7F6(+1) vs Gamma form"},
        {"triangle_cosh_cosh_cosh", quad::Family::CoshCoshOverCoshV,
         "hyperbolic integral cosh*cosh/cosh^v: quadrature vs 8F7(-1) vs Gamma form"},
        {"triangle_cosh_cosh_sinh", quad::Family::CoshCoshOverSinhV,
         "hyperbolic integral cosh*cosh/sinh^v: quadrature vs 8F7(+1) vs Gamma form"},
    };
    for (const auto& t : triangles) {
        const quad::Family fam = t.family;
        auto to_spec = [fam](const ParamPoint& p) {
            return quad::IntegralSpec{fam, *p.a, *p.b, *p.c, *p.v};
        };
        add({.id = t.id,
             .provenance = t.provenance,
             .variables = {"a", "b", "c", "v"},
             .domain = [fam, to_spec](const ParamPoint& p) {
                 if (!(*p.a > 0.05 && *p.b > 0.05 && *p.c > 0.05 && *p.v > 0.05))
                     return false;
                 if (!decay_ok(*p.v, *p.a, *p.b, *p.c, 0.1)) return false;
                 try {
                     (void)quad::closed_form(to_spec(p));
                     (void)quad::series_form(to_spec(p));
                 } catch (const Error&) {
                     return false;
                 }
                 return true;
             },
             .lhs = [to_spec](const ParamPoint& p, const EvalContext& ctx) {
                 auto sf = quad::series_form(to_spec(p));
                 auto r = series::eval_series(sf.spec, ctx.series_tol, ctx.max_terms);
                 return RecipeOutput{sf.prefactor * r.value, r.terms_used, r.accelerated};
             },
             .rhs = scalar_recipe([to_spec](const ParamPoint& p) {
                 return quad::closed_form(to_spec(p));
             }),
             .tolerance = 1e-6,
             .integral_spec = to_spec});
        if (fam == quad::Family::SinhCoshOverCoshV || fam == quad::Family::SinhCoshOverSinhV)
            reg.back().pair_regime = [](const ParamPoint& p) { return *p.b > *p.a; };
    }

    add({.id = "ramanujan_sech",
         .provenance = "Ramanujan's integral of cos/cosh with sech value",
         .variables = {"a"},
         .domain = [](const ParamPoint& p) { return std::fabs(*p.a) < 4.0; },
         .lhs = [](const ParamPoint& p, const EvalContext& ctx) {
             auto r = quad::integrate({quad::Family::CosOverCoshPi, *p.a, 0, kPi, 1},
                                      ctx.quad_tol);
             return RecipeOutput{r.value, 0, false};
         },
         .rhs = scalar_recipe([](const ParamPoint& p) {
             return 0.5 / std::cosh(*p.a);
         }),
         .tolerance = 1e-6});

    return reg;
}

}  // namespace

std::optional<double>& ParamPoint::field(std::string_view name) {
    if (name == "a") return a;
    if (name == "b") return b;
    if (name == "c") return c;
    if (name == "d") return d;
    if (name == "e") return e;
    if (name == "v") return v;
    if (name == "x") return x;
    if (name == "z") return z;
    throw DomainError("ParamPoint: unknown field " + std::string(name));
}

const std::optional<double>& ParamPoint::field(std::string_view name) const {
    return const_cast<ParamPoint*>(this)->field(name);
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = build_registry();
    return reg;
}

const Identity& find_identity(const std::string& id) {
    for (const auto& ident : registry())
        if (ident.id == id) return ident;
    throw DomainError("no such identity: " + id);
}

CheckOutcome check(const Identity& identity, const ParamPoint& p, const EvalContext& ctx) {
    if (!identity.domain(p))
        throw DomainError("check: point outside domain of " + identity.id);
    const RecipeOutput l = identity.lhs(p, ctx);
    const RecipeOutput r = identity.rhs(p, ctx);

    CheckOutcome out;
    out.lhs = l.value;
    out.rhs = r.value;
    out.terms_used = std::max(l.terms, r.terms);
    out.accelerated = l.accelerated || r.accelerated;
    double abs_res = std::fabs(l.value - r.value);
    if (identity.integral_spec) {
        auto q = quad::integrate(identity.integral_spec(p), ctx.quad_tol);
        out.integral = q.value;
        abs_res = std::max({abs_res, std::fabs(q.value - l.value),
                            std::fabs(q.value - r.value)});
    }
    out.abs_residual = abs_res;
    out.rel_residual = abs_res / (1.0 + std::fabs(r.value));
    out.pass = out.rel_residual <= identity.tolerance;
    return out;
}

std::vector<std::pair<double, double>> red2_legs(const ParamPoint& p, const EvalContext& ctx) {
    const double v = req(p.v, "v"), a = req(p.a, "a"), b = req(p.b, "b"), c = req(p.c, "c");
    std::vector<std::pair<double, double>> legs;
    for (double w : red2_weights(v, a, b, c)) {
        auto f = series::eval_series(series::make_pfq({v, w}, {1 + w}, -1.0),
                                     ctx.series_tol, ctx.max_terms);
        auto g = [&](double u) { return std::pow(1.0 + std::pow(u, 1.0 / w), -v); };
        const double by_integral =
            quadcore::integrate_adaptive(g, 0.0, 1.0, ctx.quad_tol).value;
        legs.emplace_back(f.value, by_integral);
    }
    return legs;
}

}  // namespace hypersum::identities
