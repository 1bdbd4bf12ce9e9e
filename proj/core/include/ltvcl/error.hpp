#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltvcl {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different algebras, wrong coordinate count, or a vector
/// sized for the wrong object/attribute list.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The structure at hand is not what the operation needs, e.g. a table
/// algebra whose order has no meet for some pair.
class StructureError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class LoadError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive scan would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ltvcl
