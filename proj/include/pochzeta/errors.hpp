#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pochzeta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of Gamma (non-positive integers).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of zeta at s = 1.
class PoleAtOne : public PoleError {
 public:
  PoleAtOne() : PoleError("zeta has a pole at s = 1") {}
};

/// The precision context cannot deliver the requested accuracy, e.g. too
/// few guard digits for an alternating binomial transform.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input data that must be strictly ascending is not.
class OrderError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A request exceeds the configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace pochzeta
