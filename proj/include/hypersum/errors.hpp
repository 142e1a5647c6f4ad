#pragma once

#include <stdexcept>
#include <string>

namespace hypersum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument sits on a pole of the function (nonpositive-integer lattice)
struct PoleError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// series reached the term cap with an error estimate far above tolerance
struct NonConvergedError : Error {
    using Error::Error;
};

struct DivergentError : Error {
    using Error::Error;
};

struct NotAlternatingError : Error {
    using Error::Error;
};

// integrand does not decay (vc <= |a|+|b|)
struct DecayError : Error {
    using Error::Error;
};

// origin exponent makes the integral divergent
struct SingularityError : Error {
    using Error::Error;
};

struct DomainTooThinError : Error {
    using Error::Error;
};

struct QuadError : Error {
    using Error::Error;
};

}  // namespace hypersum
