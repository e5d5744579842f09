#pragma once

#include <stdexcept>
#include <string>

namespace pedlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// polynomial arithmetic
struct NotDivisible : Error {
    using Error::Error;
};
struct NonIntegerCoefficients : Error {
    using Error::Error;
};

// parsing and structural validation
struct ParseError : Error {
    using Error::Error;
};
struct InvalidShape : Error {
    using Error::Error;
};
struct CycleDetected : Error {
    using Error::Error;
};
struct UnknownLabel : Error {
    using Error::Error;
};
struct MismatchedPoset : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct SkewNotSupported : Error {
    using Error::Error;
};
struct UnknownSuite : Error {
    using Error::Error;
};

// signals an implementation bug, never bad input
struct InternalInvariantViolation : Error {
    using Error::Error;
};

// no certified polynomial spectrum was found; message carries the poset
struct EigenExtractionFailed : Error {
    using Error::Error;
};

}  // namespace pedlab
