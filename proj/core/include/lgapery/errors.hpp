#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgapery {

/// Base class for failures of a pipeline stage. Programming errors and
/// violated preconditions use the standard exceptions instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Degenerate or non-reflexive input where the geometry stage needs more.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// No annihilating operator in the ansatz box, or an ambiguous one.
class DiscoveryError : public Error {
public:
    using Error::Error;
};

/// The leading recurrence coefficient vanishes at index n.
class RecurrenceError : public DiscoveryError {
public:
    RecurrenceError(const std::string& message, long index)
        : DiscoveryError(message + " (n = " + std::to_string(index) + ")"), index_(index) {}

    long index() const noexcept { return index_; }

private:
    long index_;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace lgapery
