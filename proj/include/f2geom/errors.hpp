#pragma once

#include <stdexcept>
#include <string>

namespace f2geom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct Inconsistent : Error {
    using Error::Error;
};

// Raised when a search space exceeds the configured member cap.
struct SearchCapExceeded : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct InvalidGeometry : Error {
    using Error::Error;
};

struct UndefinedWire : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace f2geom
