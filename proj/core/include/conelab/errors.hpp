#pragma once

#include <stdexcept>
#include <string>

namespace conelab {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand dimensions are incompatible; a contract violation by the caller.
struct DimensionMismatchError : Error {
    using Error::Error;
};

// The cone has a nontrivial lineality space where a pointed one is required.
struct NotPointedError : Error {
    using Error::Error;
};

// The cone is not proper (pointed and solid).
struct NotProperError : Error {
    using Error::Error;
};

// The zero cone was passed to an operation that needs a nonzero cone.
struct ZeroConeError : Error {
    using Error::Error;
};

// (a, b) makes (a-b)I + bE singular: a == b or a == (1-n)b.
struct InvalidABError : Error {
    using Error::Error;
};

// The cone is not invariant under coordinate permutations.
struct NotPermutationInvariantError : Error {
    using Error::Error;
};

// The iterative eigensolver exhausted its sweep budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// A JSON document does not describe a valid object.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace conelab
