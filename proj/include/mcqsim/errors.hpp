#pragma once

#include <stdexcept>
#include <string>

namespace mcqsim {

// Error taxonomy mirrors the CLI exit codes: config 2, cap 3, invariant 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate geometry (coincident dots, sub-femtometre separations).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A 2^W enumeration or state-vector request past its configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical self-check failed mid-run (norm drift, residual imaginary
// parts, ...). Always a hard error, never a warning.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mcqsim
