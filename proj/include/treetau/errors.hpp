#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treetau {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- polynomial ring ---

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Exact division requested but the dividend is not a multiple of the divisor.
class NotDivisibleError : public Error {
public:
    using Error::Error;
};

class UnassignedVariableError : public Error {
public:
    using Error::Error;
};

/// Exponent arithmetic left the machine-word range. Always a hard error.
class ExponentOverflowError : public Error {
public:
    using Error::Error;
};

// --- graph construction ---

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class LoopEdgeError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class ZeroWeightError : public Error {
public:
    using Error::Error;
};

class NotThresholdOrderedError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

// --- linear algebra ---

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class NotSquareError : public Error {
public:
    using Error::Error;
};

class SingularBlockError : public Error {
public:
    using Error::Error;
};

class ZeroVectorSumError : public Error {
public:
    using Error::Error;
};

// --- enumeration ---

class TooLargeError : public Error {
public:
    using Error::Error;
};

class TooSmallError : public Error {
public:
    using Error::Error;
};

// --- parsing / IO ---

/// Parse error with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// `^` followed by a negative exponent.
class ExponentNegativeError : public SyntaxError {
public:
    ExponentNegativeError(std::size_t line, std::size_t column)
        : SyntaxError("exponent must be nonnegative", line, column) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace treetau
