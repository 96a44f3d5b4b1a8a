#pragma once

#include <stdexcept>
#include <string>

namespace tunekit {

// Base class for all library errors. The CLI maps Error to exit code 1
// and InvalidArgument to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed hyperparameters, unknown algorithm names,
// out-of-range flags. Raised before any computation starts.
struct InvalidArgument : Error {
    using Error::Error;
};

// Malformed file content (cache files, plans, traces). Messages carry
// enough position information to locate the offending record.
struct ParseError : Error {
    using Error::Error;
};

// Lookup of a configuration that a partial cache does not contain.
struct MissingEntry : Error {
    using Error::Error;
};

// Every entry of a cache failed; there is no optimum to normalize against.
struct NoFeasiblePoint : Error {
    using Error::Error;
};

// Iterative solver did not reach its tolerance.
struct NonConvergence : Error {
    NonConvergence(const std::string& what, long iterations, double residual)
        : Error(what), iterations(iterations), residual(residual) {}
    long iterations;
    double residual;
};

void warn(const std::string& message);

}  // namespace tunekit
