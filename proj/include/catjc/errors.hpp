#pragma once

#include <stdexcept>

namespace catjc {

// Bad user-supplied parameters (rejected before any physics runs).
struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A parameter combination that names the zero vector (e.g. the odd cat of
// the vacuum), where normalization diverges.
struct DegenerateStateError : InvalidParameterError {
    using InvalidParameterError::InvalidParameterError;
};

// A density matrix whose derived probabilities fall outside [0,1] by more
// than the rounding budget. Indicates a broken producer, not bad input.
struct CorruptStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical identity the pipeline guarantees (entropic uncertainty
// bound, monotone grid, ...) failed beyond its tolerance.
struct InvariantViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace catjc
