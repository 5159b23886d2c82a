#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glcq {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division or inversion with a zero divisor.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

/// A denominator vanishes at the specialization target.
struct PoleAtSpecialization : Error {
    explicit PoleAtSpecialization(const std::string& msg) : Error(msg) {}
};

/// Operands built over different field modes or algebra configurations.
struct ConfigMismatch : Error {
    explicit ConfigMismatch(const std::string& msg) : Error(msg) {}
};

/// Matrix or variable index outside the configured bounds.
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

/// Malformed expression text; `position` is a 0-based offset into the source.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace glcq
