// errors.hpp — exception types mapped to CLI exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace catwig {

// Bad user input: malformed config, out-of-range value, inconsistent fields.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature or solver failed its convergence gate.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a model's validity domain (e.g. sphere separation < 2a).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_convergence = 3;
inline constexpr int exit_domain = 4;

} // namespace catwig
