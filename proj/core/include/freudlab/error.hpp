#pragma once

#include <stdexcept>
#include <string>

namespace freudlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument (negative mass, even Gamma index, bad configuration).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Index outside the range covered by a table.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Argument on a branch cut or outside a function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not converge within its budget.
class IterationError : public Error {
 public:
  IterationError(const std::string& what, int index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// The working precision is exhausted; the caller should retry with more bits.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, int index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Division by a value that vanished to working precision.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace freudlab
