#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace piquant {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (unit expressions, formulas, rational literals).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Symbol not present in the unit registry.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Mixed bases, mismatched dimensions or wrong vector lengths.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Parameter outside its admissible range (K <= 1, nonpositive scale, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Failure while evaluating a user-supplied function.
class EvalError : public Error {
public:
    using Error::Error;
};

} // namespace piquant
