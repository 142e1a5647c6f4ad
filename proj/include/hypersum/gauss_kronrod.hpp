#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "hypersum/errors.hpp"

// Adaptive 7-15 Gauss-Kronrod panel integration on a finite interval.
// Worst-panel-first refinement until the summed error estimate meets the
// absolute tolerance.

namespace hypersum::quadcore {

namespace detail {

// 15-point Kronrod nodes on [0,1] side of the symmetric rule
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// embedded 7-point Gauss weights (nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7])
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

}  // namespace detail

struct Panel {
    double a = 0, b = 0;
    double value = 0;
    double error = 0;
};

struct AdaptiveResult {
    double value = 0;
    double abs_error = 0;
    long evaluations = 0;
};

template <class F>
Panel gk15(F&& f, double a, double b) {
    using namespace detail;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = f(mid);
    fv[7] = fc;
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        resk += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }

    // QUADPACK-style error scaling against the integrand's variation
    const double mean = resk * 0.5;
    double resasc = 0;
    for (int i = 0; i < 8; ++i) {
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) +
                             (i < 7 ? std::fabs(fv[14 - i] - mean) : 0.0));
    }
    resasc *= std::fabs(half);

    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * half;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    p.error = err;
    return p;
}

template <class F>
AdaptiveResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                  std::size_t max_panels = 20000) {
    AdaptiveResult res;
    if (a == b) return res;

    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> work(worse);

    Panel root = gk15(f, a, b);
    res.evaluations = 15;
    double total_err = root.error;
    work.push(root);

    std::vector<Panel> done;
    while (total_err > abs_tol && done.size() + work.size() < max_panels) {
        Panel worst = work.top();
        work.pop();
        total_err -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval no longer splittable in double precision
            done.push_back(worst);
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        res.evaluations += 30;
        total_err += left.error + right.error;
        work.push(left);
        work.push(right);
    }
    if (total_err > abs_tol && done.size() + work.size() >= max_panels)
        throw QuadError("adaptive quadrature: panel budget exhausted");

    // deterministic accumulation: sort panels by position before summing
    while (!work.empty()) {
        done.push_back(work.top());
        work.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : done) {
        res.value += p.value;
        res.abs_error += p.error;
    }
    return res;
}

}  // namespace hypersum::quadcore
