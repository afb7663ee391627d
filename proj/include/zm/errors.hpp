#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zm {

// Root of every error raised by the library. The CLI maps these to exit code 1
// and prints what() verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument sits on a pole of the gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Argument beyond the supported numeric range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An integrator or series could not reach the requested tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

// Milne amplitude dropped below the collapse floor during integration.
class AmplitudeCollapseError : public Error {
 public:
  using Error::Error;
};

// |alpha| too small for the Milne closed form, which divides by alpha^2.
class DegenerateAlphaError : public Error {
 public:
  using Error::Error;
};

// Two samples were expected to share an abscissa but do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MonotonicityError : public Error {
 public:
  using Error::Error;
};

class EmptyTableError : public Error {
 public:
  using Error::Error;
};

// Parameter outside a supported operating window (as opposed to a true
// mathematical domain violation).
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace zm
