#pragma once

#include <stdexcept>
#include <string>

namespace gtrop {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (scalar expressions, JSON shapes). Carries a byte
// offset into the offending text when one is known.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    explicit ParseError(const std::string& msg) : Error(msg), position(0) {}
};

// A mathematically impossible request: division by zero, inverting a singular
// matrix, tropicalizing a point outside the torus.
struct MathError : Error {
    explicit MathError(const std::string& msg) : Error(msg) {}
};

// Input violates a documented precondition of an operation.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Structured data fails a validation contract (fan validity, stacky face
// compatibility, chain decorations).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace gtrop
