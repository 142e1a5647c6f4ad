#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/errors.hpp"
#include "hypersum/specfun.hpp"

// Term-by-term evaluation of pFq(z) with convergence classification, Euler
// acceleration for alternating tails at z = -1, and Richardson extrapolation
// for slow one-signed tails at z = +1.

namespace hypersum::series {

using specfun::ConjugatePair;

// One parameter slot: either a single real parameter or a conjugate pair
// (which counts as two scalar parameters).
struct ParamEntry {
    double re = 0.0;
    double im = 0.0;
    bool is_pair = false;

    static ParamEntry real(double v) { return {v, 0.0, false}; }
    static ParamEntry pair(double re, double im) {
        return {re, im < 0 ? -im : im, true};
    }
    static ParamEntry pair(const ConjugatePair& p) { return {p.re, p.im, true}; }

    // contribution to the parameter sums of the omega criterion
    double scalar_sum() const { return is_pair ? 2.0 * re : re; }
    int scalar_count() const { return is_pair ? 2 : 1; }
};

struct HypergeometricSpec {
    std::vector<ParamEntry> numerators;
    std::vector<ParamEntry> denominators;
    double z = 0.0;

    int scalar_p() const;
    int scalar_q() const;
};

// convenience constructor for all-real parameter lists
HypergeometricSpec make_pfq(std::span<const double> nums,
                            std::span<const double> dens, double z);
HypergeometricSpec make_pfq(std::initializer_list<double> nums,
                            std::initializer_list<double> dens, double z);

enum class ConvergenceTag {
    EntireArgument,               // p <= q (or terminating polynomial)
    InsideDisk,                   // p = q+1, |z| < 1
    AbsolutelyConvergentOnCircle, // p = q+1, |z| = 1, omega > 0
    ConditionallyConvergent,      // p = q+1, z = -1, -1 < omega <= 0
    Divergent,
};

const char* to_string(ConvergenceTag tag);

struct ConvergenceClass {
    ConvergenceTag tag = ConvergenceTag::Divergent;
    double omega = 0.0;  // sum(denominators) - sum(numerators)
};

struct SeriesResult {
    double value = 0.0;
    long terms_used = 0;
    double error_estimate = 0.0;  // absolute
    ConvergenceClass cls;
    bool accelerated = false;
};

// Convergence trichotomy on the unit circle; z = +1 with omega <= 0 is
// refused outright (Divergent), no Abel summation is attempted.
ConvergenceClass classify(const HypergeometricSpec& spec);

// Multiplicative term recurrence; stops when |term| < tol*|sum| holds for 3
// consecutive terms or the cap is reached, in which case the tail is summed
// by Euler transformation (z = -1) or Richardson extrapolation (z = +1).
SeriesResult eval_series(const HypergeometricSpec& spec, double tol = 1e-12,
                         long max_terms = 20000);

// Iterated-mean (Euler) transform of an alternating series given by raw
// signed terms. Returns (value, error_estimate). Terms before
// first_alternating are summed directly.
std::pair<double, double> euler_accelerated_sum(std::span<const double> terms,
                                                std::size_t first_alternating = 0);

}  // namespace hypersum::series
