#include "hypersum/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hypersum::series {

namespace {

bool is_real_nonpositive_integer(const ParamEntry& e) {
    if (e.is_pair && e.im != 0.0) return false;
    return specfun::at_nonpositive_integer(e.re);
}

// degree of the terminating polynomial, or -1 when the series is infinite
long polynomial_degree(const HypergeometricSpec& spec) {
    long degree = -1;
    for (const auto& e : spec.numerators) {
        if (is_real_nonpositive_integer(e)) {
            const long m = static_cast<long>(-std::round(e.re));
            if (degree < 0 || m < degree) degree = m;
        }
    }
    return degree;
}

// first index from which every real factor (alpha_i + n), (beta_j + n) is
// positive, so terms are one-signed (z=1) or strictly alternating (z=-1)
long smooth_tail_start(const HypergeometricSpec& spec) {
    double most_negative = 0.0;
    auto scan = [&](const std::vector<ParamEntry>& list) {
        for (const auto& e : list)
            if (!e.is_pair || e.im == 0.0) most_negative = std::min(most_negative, e.re);
    };
    scan(spec.numerators);
    scan(spec.denominators);
    return static_cast<long>(std::floor(-most_negative)) + 1;
}

}  // namespace

int HypergeometricSpec::scalar_p() const {
    int p = 0;
    for (const auto& e : numerators) p += e.scalar_count();
    return p;
}

int HypergeometricSpec::scalar_q() const {
    int q = 0;
    for (const auto& e : denominators) q += e.scalar_count();
    return q;
}

HypergeometricSpec make_pfq(std::span<const double> nums,
                            std::span<const double> dens, double z) {
    HypergeometricSpec spec;
    spec.numerators.reserve(nums.size());
    spec.denominators.reserve(dens.size());
    for (double a : nums) spec.numerators.push_back(ParamEntry::real(a));
    for (double b : dens) spec.denominators.push_back(ParamEntry::real(b));
    spec.z = z;
    return spec;
}

HypergeometricSpec make_pfq(std::initializer_list<double> nums,
                            std::initializer_list<double> dens, double z) {
    return make_pfq(std::span<const double>(nums.begin(), nums.size()),
                    std::span<const double>(dens.begin(), dens.size()), z);
}

const char* to_string(ConvergenceTag tag) {
    switch (tag) {
        case ConvergenceTag::EntireArgument: return "EntireArgument";
        case ConvergenceTag::InsideDisk: return "InsideDisk";
        case ConvergenceTag::AbsolutelyConvergentOnCircle: return "AbsolutelyConvergentOnCircle";
        case ConvergenceTag::ConditionallyConvergent: return "ConditionallyConvergent";
        case ConvergenceTag::Divergent: return "Divergent";
    }
    return "?";
}

ConvergenceClass classify(const HypergeometricSpec& spec) {
    ConvergenceClass cls;
    double sum_num = 0.0, sum_den = 0.0;
    for (const auto& e : spec.numerators) sum_num += e.scalar_sum();
    for (const auto& e : spec.denominators) sum_den += e.scalar_sum();
    cls.omega = sum_den - sum_num;

    const int p = spec.scalar_p();
    const int q = spec.scalar_q();
    const double az = std::fabs(spec.z);

    if (polynomial_degree(spec) >= 0) {
        cls.tag = ConvergenceTag::EntireArgument;
        return cls;
    }
    if (p <= q) {
        cls.tag = ConvergenceTag::EntireArgument;
        return cls;
    }
    if (p == q + 1) {
        if (az < 1.0) {
            cls.tag = ConvergenceTag::InsideDisk;
            return cls;
        }
        if (az == 1.0) {
            if (cls.omega > 0.0) {
                cls.tag = ConvergenceTag::AbsolutelyConvergentOnCircle;
                return cls;
            }
            if (spec.z == -1.0 && cls.omega > -1.0) {
                cls.tag = ConvergenceTag::ConditionallyConvergent;
                return cls;
            }
        }
    }
    cls.tag = ConvergenceTag::Divergent;
    return cls;
}

std::pair<double, double> euler_accelerated_sum(std::span<const double> terms,
                                                std::size_t first_alternating) {
    double head = 0.0;
    for (std::size_t i = 0; i < std::min(first_alternating, terms.size()); ++i)
        head += terms[i];
    std::span<const double> tail = terms.subspan(std::min(first_alternating, terms.size()));

    // a zero term in a hypergeometric tail means exact termination
    std::size_t n = tail.size();
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] == 0.0) {
            n = i;
            break;
        }
    }
    if (n == 0) return {head, 0.0};
    for (std::size_t i = 1; i < n; ++i) {
        if ((tail[i] > 0) == (tail[i - 1] > 0))
            throw NotAlternatingError("euler_accelerated_sum: signs do not alternate");
    }
    if (n == 1) return {head + 0.5 * tail[0], 0.5 * std::fabs(tail[0])};

    // iterated pairwise means of the partial sums
    std::vector<double> s(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += tail[i];
        s[i] = acc;
    }
    double best = s[n - 1];
    double last_increment = std::fabs(tail[n - 1]);
    std::size_t width = n;
    while (width > 1) {
        for (std::size_t i = 0; i + 1 < width; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        --width;
        const double inc = std::fabs(s[width - 1] - best);
        best = s[width - 1];
        last_increment = inc;
    }
    return {head + best, last_increment};
}

namespace {

struct TermIterator {
    const HypergeometricSpec& spec;
    double term = 1.0;
    long n = 0;  // index of the term currently held

    explicit TermIterator(const HypergeometricSpec& s) : spec(s) {}

    // advance to term n+1; returns the new term
    double next() {
        double factor = 1.0;
        for (const auto& e : spec.numerators)
            factor *= e.is_pair ? ((e.re + n) * (e.re + n) + e.im * e.im) : (e.re + n);
        for (const auto& e : spec.denominators)
            factor /= e.is_pair ? ((e.re + n) * (e.re + n) + e.im * e.im) : (e.re + n);
        term *= factor * spec.z / (n + 1.0);
        ++n;
        return term;
    }
};

// Richardson extrapolation for S_inf given partial sums at n, 2n, 4n, ...:
// the tail behaves like n^{-omega} (c0 + c1/n + ...), so each level removes
// one power using the exactly known exponent.
double richardson_tail(std::vector<double> s, double omega, double& err) {
    std::size_t levels = s.size() - 1;
    double prev = s.back();
    for (std::size_t k = 0; k < levels; ++k) {
        const double f = std::pow(2.0, omega + static_cast<double>(k));
        for (std::size_t j = 0; j + 1 < s.size() - k; ++j)
            s[j] = (f * s[j + 1] - s[j]) / (f - 1.0);
        err = std::fabs(s[s.size() - k - 2] - prev);
        prev = s[s.size() - k - 2];
    }
    return s[0];
}

}  // namespace

SeriesResult eval_series(const HypergeometricSpec& spec, double tol, long max_terms) {
    for (const auto& e : spec.denominators) {
        if (is_real_nonpositive_integer(e))
            throw PoleError("eval_series: denominator parameter at nonpositive integer");
    }
    if (spec.scalar_p() > spec.scalar_q() + 1 && polynomial_degree(spec) < 0)
        throw DomainError("eval_series: p > q+1 without termination");
    if (max_terms < 8) throw DomainError("eval_series: max_terms too small");

    SeriesResult res;
    res.cls = classify(spec);
    if (res.cls.tag == ConvergenceTag::Divergent)
        throw DivergentError("eval_series: divergent spec");

    const bool on_circle = std::fabs(spec.z) == 1.0 &&
                           spec.scalar_p() == spec.scalar_q() + 1 &&
                           polynomial_degree(spec) < 0;

    // checkpoints for the z=+1 Richardson tail: power-of-two multiples
    const long base = max_terms / 16;
    const bool plan_richardson = on_circle && spec.z == 1.0 && base >= 4;
    const long cap = plan_richardson ? 16 * base : max_terms;

    // raw-term window for the z=-1 Euler tail
    const long alt_start = std::max<long>(smooth_tail_start(spec), 1);
    const bool plan_euler = on_circle && spec.z == -1.0 && cap > alt_start + 16;
    std::vector<double> raw;
    const long euler_window = 256;

    // the small-term stopping rule bounds the tail only when terms alternate
    // or decay geometrically; one-signed algebraic tails at z=+1 must run to
    // the extrapolation cap
    const bool allow_plain_stop = !(on_circle && spec.z == 1.0);

    TermIterator it(spec);
    double sum = 1.0;
    long consecutive_small = 0;
    std::vector<double> checkpoints;
    double head_before_window = 0.0;
    long window_begin = -1;

    long terms = 1;  // n = 0 term
    while (terms < cap) {
        const double t = it.next();
        if (t == 0.0) {
            // terminating polynomial: every later term is exactly zero
            res.value = sum;
            res.terms_used = terms;
            res.error_estimate = 0.0;
            return res;
        }
        sum += t;
        ++terms;

        if (plan_euler && terms > alt_start) {
            if (window_begin < 0) {
                window_begin = terms;
                head_before_window = sum - t;
                raw.reserve(euler_window);
            }
            if (static_cast<long>(raw.size()) < euler_window) raw.push_back(t);
        }
        if (plan_richardson && terms % base == 0) checkpoints.push_back(sum);

        if (allow_plain_stop && std::fabs(t) <= tol * std::max(std::fabs(sum), 1e-300)) {
            if (++consecutive_small >= 3) {
                res.value = sum;
                res.terms_used = terms;
                res.error_estimate = std::fabs(t);
                return res;
            }
        } else {
            consecutive_small = 0;
        }

        if (plan_euler && static_cast<long>(raw.size()) == euler_window) break;
    }

    if (plan_euler && !raw.empty()) {
        auto [tail, terr] = euler_accelerated_sum(raw);
        res.value = head_before_window + tail;
        res.terms_used = window_begin - 1 + static_cast<long>(raw.size());
        res.error_estimate = std::max(terr, 2.3e-16 * std::fabs(res.value));
        res.accelerated = true;
        if (res.error_estimate > 100.0 * tol * (1.0 + std::fabs(res.value)))
            throw NonConvergedError("eval_series: Euler tail did not converge");
        return res;
    }

    if (plan_richardson && checkpoints.size() == 16) {
        std::vector<double> s = {checkpoints[0], checkpoints[1], checkpoints[3],
                                 checkpoints[7], checkpoints[15]};
        double err = 0.0;
        res.value = richardson_tail(std::move(s), res.cls.omega, err);
        res.terms_used = terms;
        res.error_estimate = err;
        res.accelerated = true;
        if (!std::isfinite(res.value) ||
            res.error_estimate > 100.0 * tol * (1.0 + std::fabs(res.value)))
            throw NonConvergedError("eval_series: Richardson tail did not converge");
        return res;
    }

    res.value = sum;
    res.terms_used = terms;
    res.error_estimate = std::fabs(it.term) * static_cast<double>(terms);
    if (res.error_estimate > 100.0 * tol * (1.0 + std::fabs(res.value)))
        throw NonConvergedError("eval_series: term cap reached");
    return res;
}

}  // namespace hypersum::series
