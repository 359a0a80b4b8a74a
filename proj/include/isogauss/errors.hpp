#pragma once

#include <stdexcept>
#include <string>

namespace isogauss {

// Base class for all library errors. Subclasses encode the failure class so
// callers (and the CLI exit-code mapping) can dispatch without string parsing.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or squareness violations.
struct DimensionError : Error {
    using Error::Error;
};

// Iterative method failed to converge, non-finite values, divergence.
struct NumericError : Error {
    using Error::Error;
};

// Matrix numerically singular where an SPD/invertible one is required.
struct SingularityError : Error {
    using Error::Error;
};

// Too few samples for the requested estimator.
struct InsufficientDataError : Error {
    using Error::Error;
};

// Invalid configuration value, unknown tag, unknown key.
struct ConfigError : Error {
    using Error::Error;
};

// Input outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Filesystem failures.
struct IoError : Error {
    using Error::Error;
};

}  // namespace isogauss
