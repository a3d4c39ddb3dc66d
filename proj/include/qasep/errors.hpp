#pragma once

#include <stdexcept>
#include <string>

namespace qasep {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mixing values that live over different theta contexts.
struct ContextError : Error {
    using Error::Error;
};

/// Division by zero / inversion of a zero divisor.
struct DivisionError : Error {
    using Error::Error;
};

/// Request outside the domain a table or recursion covers.
struct DomainError : Error {
    using Error::Error;
};

/// Operation applied in the wrong singular/non-singular regime.
struct RegimeError : Error {
    using Error::Error;
};

/// Invalid parameter values or unparsable input.
struct ParameterError : Error {
    using Error::Error;
};

/// System size over the configured cap.
struct SizeError : Error {
    using Error::Error;
};

/// Truncated series whose tail does not decay.
struct TruncationError : Error {
    using Error::Error;
};

/// Internal inconsistency that signals a bug (rank defect, zero normalizer, ...).
struct ModelError : Error {
    using Error::Error;
};

} // namespace qasep
