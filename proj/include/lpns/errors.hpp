#pragma once

#include <stdexcept>
#include <string>

namespace lpns {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input data (shape mismatch, NaN samples, ...).
struct invalid_input : error {
    using error::error;
};

/// A numeric parameter outside its admissible range (p < 1, alpha outside (0,1), ...).
struct invalid_parameter : error {
    using error::error;
};

/// Two objects that must live on the same grid do not.
struct grid_mismatch : error {
    using error::error;
};

/// Hermitian symmetry of a spectrum is violated beyond tolerance.
struct symmetry_error : error {
    using error::error;
};

/// An operation would alias frequency content off the representable set.
struct aliasing_error : error {
    using error::error;
};

/// Time stepping became unstable (NaN state or CFL violation).
struct instability_error : error {
    instability_error(const std::string& what, double last_valid_time)
        : error(what), last_valid_t(last_valid_time) {}
    double last_valid_t;
};

}  // namespace lpns
