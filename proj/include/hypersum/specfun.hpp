#pragma once

#include <utility>

#include "hypersum/errors.hpp"

// Scalar special-function kernel: gamma family, Pochhammer algebra,
// digamma/trigamma, lowercase beta, incomplete beta. All functions are pure
// and safe to call concurrently.

namespace hypersum::specfun {

// A complex-conjugate parameter pair (re + i*im, re - i*im), stored with
// im >= 0. When im == 0 the pair degenerates to a doubled real parameter.
struct ConjugatePair {
    double re = 0.0;
    double im = 0.0;

    ConjugatePair() = default;
    ConjugatePair(double re_, double im_) : re(re_), im(im_ < 0 ? -im_ : im_) {}

    bool degenerate() const { return im == 0.0; }
};

// true when x is within 1e-9 of a nonpositive integer
bool at_nonpositive_integer(double x);

// Gamma(x). Lanczos approximation (g=7, 9 coefficients), reflection for
// x < 0.5. Throws PoleError on the nonpositive-integer lattice and
// OverflowError when the result exceeds double range.
double gamma(double x);

// ln Gamma(x) for x > 0; DomainError otherwise.
double log_gamma(double x);

// ln |Gamma(x)| for any non-pole x; sign of Gamma(x) returned in sign.
double log_gamma_signed(double x, int& sign);

// Rising factorial (lambda)_n. Exact zero when lambda is a nonpositive
// integer reached by the product; overflow saturates to +/-infinity.
double pochhammer(double lambda, int n);

// ((sigma1 + r)(sigma2 + r)) for a conjugate pair = (re+r)^2 + im^2, the real
// building block for term recurrences with pair parameters.
double pochhammer_ratio_step(const ConjugatePair& pair, int r);

// Psi(x): recurrence shift to x >= 6, then the Bernoulli asymptotic series.
double digamma(double x);

// Psi'(x) = sum_{k>=0} 1/(x+k)^2: direct sum up to a shift point, then the
// Euler-Maclaurin tail.
double trigamma(double x);

// beta(x) = (Psi((1+x)/2) - Psi(x/2)) / 2, the alternating-series beta
// function of one variable.
double lowercase_beta(double x);

// d/dx lowercase_beta, central difference with one Richardson level (h=1e-5).
double lowercase_beta_derivative(double x);

// B_z(alpha, beta) = int_0^z t^(alpha-1) (1-t)^(beta-1) dt for 0 < z <= 1,
// alpha > 0 (and beta > 0 when z = 1), by adaptive quadrature with
// endpoint-singularity substitution.
double incomplete_beta(double z, double alpha, double beta_p);

}  // namespace hypersum::specfun
