#ifndef FPCANON_ERRORS_HPP
#define FPCANON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpcanon {

/// Base class for all library errors. CLI maps these to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different primes.
struct PrimeMismatchError : Error {
    using Error::Error;
};

/// Invalid value for the requested operation (division by zero, non-monic
/// input to factor, epsilon out of range, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Matrix dimensions do not fit the operation.
struct ShapeError : Error {
    using Error::Error;
};

/// Singular input where a nonsingular matrix is required (infinite cokernel).
struct SingularMatrixError : Error {
    using Error::Error;
};

/// A configured work or size bound would be exceeded.
struct BoundExceededError : Error {
    using Error::Error;
};

/// An internal cross-check failed; indicates an implementation bug, not bad
/// input.
struct InternalCheckError : Error {
    using Error::Error;
};

/// Malformed textual input (polynomials, matrices, configs).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace fpcanon

#endif  // FPCANON_ERRORS_HPP
