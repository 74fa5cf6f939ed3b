#ifndef QZETA_ERRORS_HPP
#define QZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qzeta {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix dimensions do not conform.
struct ShapeError : Error {
    using Error::Error;
};

// Input outside the mathematical domain (zero divisor, pole, wrong scalar kind).
struct DomainError : Error {
    using Error::Error;
};

// A numerical postcondition failed badly enough to signal a kernel breakdown.
struct NumericalError : Error {
    using Error::Error;
};

// Structural precondition (e.g. triangularity) not met.
struct StructureError : Error {
    using Error::Error;
};

// Malformed input text; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that violates a semantic constraint.
struct ValidationError : Error {
    using Error::Error;
};

// A weight assignment does not cover every arc.
struct MissingWeightError : Error {
    using Error::Error;
};

// Arc or entry index out of range.
struct IndexError : Error {
    using Error::Error;
};

// Requested enumeration exceeds the configured size cap.
struct CapacityError : Error {
    using Error::Error;
};

// Input too large for a deliberately naive reference routine.
struct SizeError : Error {
    using Error::Error;
};

// Operation requires a nonempty word.
struct EmptyWordError : Error {
    using Error::Error;
};

} // namespace qzeta

#endif // QZETA_ERRORS_HPP
