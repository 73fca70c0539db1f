#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

/// Raised when an argument violates a documented precondition
/// (malformed complex, out-of-range dimension, bad set family, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Raised when a numerical routine cannot certify its own result
/// (eigensolver failure, integer count drifting away from an integer).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace hdx
