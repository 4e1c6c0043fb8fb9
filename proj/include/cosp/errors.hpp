#pragma once

#include <stdexcept>
#include <string>

namespace cosp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: parameter sets that violate model invariants, malformed
// option specs, degenerate ranges.
struct ValidationError : Error {
    using Error::Error;
};

// A characteristic-function or cumulant-generating-function evaluation left
// the representable range (moment explosion, exp overflow).
struct NumericalOverflowError : Error {
    using Error::Error;
};

struct InvalidCumulantsError : Error {
    using Error::Error;
};

// The reference quadrature could not reach the requested tolerance within
// its node budget.
struct OracleConvergenceError : Error {
    using Error::Error;
};

// Implied-volatility inversion: the target price sits at or outside the
// no-arbitrage bounds.
struct NoSolutionError : Error {
    NoSolutionError(const std::string& msg, bool at_lower)
        : Error(msg), lower_bound(at_lower) {}
    bool lower_bound;
};

}  // namespace cosp
