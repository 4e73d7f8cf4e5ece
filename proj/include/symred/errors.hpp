#ifndef SYMRED_ERRORS_HPP
#define SYMRED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symred {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand variable counts or point lengths disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operation needs a nonzero polynomial.
class EmptyPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (non-monic,
/// not hyperbolic, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A grid scan would exceed the configured point budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace symred

#endif  // SYMRED_ERRORS_HPP
