#pragma once

#include <stdexcept>

namespace herbidyn {

// Invalid model parameters or out-of-domain arguments.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A growth model whose declared monotonicity class fails the numeric check.
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root bracketing found no sign change where one was guaranteed.
struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation not defined for this (variant, growth model) combination.
struct UnsupportedModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state component left the sane range during iteration.
struct SimulationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trajectory too short for the requested statistic.
struct TooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fewer than two threshold crossings: burst period undefined.
struct NoBursts : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace herbidyn
