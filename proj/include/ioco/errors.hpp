#pragma once

#include <stdexcept>
#include <string>

namespace ioco {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed model: unknown state, init outside the state set, ...
struct StructuralError : Error {
    using Error::Error;
};

// Label outside the declared alphabet, reserved token, input/output clash.
struct AlphabetError : Error {
    using Error::Error;
};

// Two models whose input sets or output sets overlap.
struct ComposabilityError : Error {
    using Error::Error;
};

// Operation precondition violated (non-receptive implementation, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Degenerate generator or query parameters.
struct ParameterError : Error {
    using Error::Error;
};

// Unknown fixture or catalog entry.
struct LookupError : Error {
    using Error::Error;
};

// Syntax error in a model file; carries the 1-based source line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace ioco
