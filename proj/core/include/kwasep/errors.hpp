#pragma once

#include <stdexcept>
#include <string>

namespace kwasep {

// Bad arguments from the caller (lengths, ranges, zero scales, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation hit a pole / zero coordinate / nonpositive log argument.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A parameter point where an eigenvalue collision makes a triangular
// solve impossible.  Pick a different (generic) point.
struct DegenerateParametersError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Something that can only happen if the implementation is wrong
// (nonzero remainder in a division that must be exact, a basis that
// fails to close, an inconsistent interpolation system).
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// A truncated Fock computation whose tail estimate exceeds the tolerance.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An infinite sum or product evaluated outside its convergence region.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A tabulated transform queried outside the sampled range.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kwasep
