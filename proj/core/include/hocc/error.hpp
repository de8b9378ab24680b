#pragma once

#include <stdexcept>
#include <string>

namespace hocc {

// Argument outside the mathematical domain of an operation (x <= 0 for
// ln_gamma, invalid fading parameters, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative or adaptive procedure exhausted its budget before reaching the
// requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hypergeometric lower parameter at a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Series requested outside its region of convergence.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation has no implementation for the given fading family.
class UnsupportedModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input (model spec, config file) could not be parsed. `line` is 0
// for single-line inputs; `column` is 1-based, 0 when unknown.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::invalid_argument(what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hocc
