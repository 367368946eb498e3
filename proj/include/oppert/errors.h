#pragma once

#include <stdexcept>
#include <string>

namespace oppert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different ladder algebras were combined.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A well-formed input violates a domain invariant (non-Hermitian V, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation hit a parameter without a value.
class MissingValue : public Error {
 public:
  explicit MissingValue(const std::string& name)
      : Error("missing value for parameter '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace oppert
