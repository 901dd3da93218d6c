#pragma once

#include <stdexcept>
#include <string>

namespace dfla {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  NonSquare() : Error("matrix is not square") {}
  explicit NonSquare(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class Unsolvable : public Error {
 public:
  Unsolvable() : Error("linear system has no solution") {}
};

class ZeroMatrix : public Error {
 public:
  ZeroMatrix() : Error("matrix has rank 0") {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("circuit denominator evaluates to zero") {}
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

using MalformedInput = ParseError;

/// A documented precondition of a combinatorial checker failed; the message
/// carries the witness.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotLIntersecting : public PreconditionViolated {
 public:
  NotLIntersecting(std::size_t i, std::size_t j, std::size_t size)
      : PreconditionViolated("sets " + std::to_string(i) + " and " + std::to_string(j) +
                             " have intersection size " + std::to_string(size) + ", which is not in L"),
        first(i),
        second(j),
        intersection(size) {}

  std::size_t first;
  std::size_t second;
  std::size_t intersection;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested instance is larger than the vertex cap allows.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The instance is beyond the scale at which exact search is attempted.
class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dfla
