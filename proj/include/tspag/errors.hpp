#ifndef TSPAG_ERRORS_HPP
#define TSPAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tspag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A tour whose order is not a permutation of {1,...,m}.
struct InvalidTourError : Error {
    using Error::Error;
};

/// An assignment vector that is not an integral permutation matrix where one
/// is required (conversions and lifts are defined at vertices only).
struct NotAVertexError : Error {
    using Error::Error;
};

/// An exhaustive enumeration whose candidate count exceeds its guard.
struct EnumerationRefusedError : Error {
    using Error::Error;
};

/// A builder invoked below its minimum size (the triplet cost cases overlap
/// at m = 3, so the triplet systems require m >= 4; m = 0 has no variables).
struct DegenerateConstructionError : Error {
    using Error::Error;
};

/// Exact-input violations: malformed rationals, float literals, bad shapes.
struct ParseError : Error {
    using Error::Error;
};

/// A point referencing a variable the system does not declare.
struct UnknownVariableError : Error {
    using Error::Error;
};

} // namespace tspag

#endif
