#pragma once

#include <stdexcept>
#include <string>

namespace orbcdga {

/// Malformed or out-of-contract input (bad group spec, non-prime p, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// |G| exceeds the configured bound.
struct SizeLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (these indicate a bug or corrupted
/// input, never an expected mathematical negative).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation outside its supported shape family.
struct NotApplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No valid weight function for the truncated homology oracle.
struct OracleUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace orbcdga
