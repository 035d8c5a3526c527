#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdg {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument to a constructor or operation (n < 2, element index out of range, ...).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A structure-constant presentation violates a ring axiom.
class PresentationError : public Error {
public:
    PresentationError(std::string axiom, std::string message)
        : Error(std::move(message)), axiom_(std::move(axiom)) {}
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

// Ring-DSL syntax error with a deterministic byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(expected) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Relation set does not normalize to the supported triangular quotient shape.
class UnsupportedPresentationError : public Error {
public:
    using Error::Error;
};

// Graph-level operation on a ring whose zero-divisor graph has no vertices.
class EmptyGraphError : public Error {
public:
    using Error::Error;
};

// Malformed graph input file; carries the 1-based line number.
class GraphFileError : public Error {
public:
    GraphFileError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace zdg
