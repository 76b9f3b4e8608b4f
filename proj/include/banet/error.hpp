#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace banet {

// Base class of every error raised by the library. The CLI maps these to
// exit code 2 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node index outside 1..n, or a node subset that is empty where it must not be.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Schedule violating the invariants of its family (overlap, empty block,
// missing node), or a schedule of the wrong family for an operation.
class ScheduleError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration requested over more nodes than the configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A trajectory did not close within the caller's step budget.
class StepBudgetExhausted : public Error {
 public:
  using Error::Error;
};

// A checked precondition of a theorem instance does not hold (e.g. the
// interaction graph is required to be acyclic but is not).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Arithmetic overflow in the exact rational domain.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace banet
