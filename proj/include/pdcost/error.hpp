#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdcost {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (inapplicable transition,
/// grammar not in the required normal form, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Index or length argument out of range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A model refers to something it does not declare.
class ModelError : public Error {
public:
    using Error::Error;
};

/// Simulation failed at a given position of a transition sequence.
class SimulationError : public PreconditionError {
public:
    SimulationError(std::size_t position, const std::string& what)
        : PreconditionError(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace pdcost
