#pragma once

#include <stdexcept>
#include <string>

namespace pairgen {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected input: precondition or argument validation failure.
/// The CLI maps these to exit code 2.
class validation_error : public error {
public:
    using error::error;
};

/// Failure during a computation that was started with valid inputs
/// (integrator breakdown, invariant violation). CLI exit code 1.
class compute_error : public error {
public:
    using error::error;
};

}  // namespace pairgen
