#pragma once

#include <stdexcept>
#include <string>

namespace clusterembed {

/// Bad parameters or malformed user input (CLI maps these to exit code 2).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure at runtime: divergence, degenerate instance, undefined
/// result (CLI maps these to exit code 1).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace clusterembed
