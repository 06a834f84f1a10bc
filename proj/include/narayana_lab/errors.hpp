#pragma once

#include <stdexcept>
#include <string>

namespace nlab {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2 (usage or precondition failure).
class LabError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public LabError {
 public:
  using LabError::LabError;
};

class InexactDivision : public LabError {
 public:
  using LabError::LabError;
};

class NonUnitDivisor : public LabError {
 public:
  using LabError::LabError;
};

class WindowExceeded : public LabError {
 public:
  using LabError::LabError;
};

class SizeLimitExceeded : public LabError {
 public:
  using LabError::LabError;
};

class DomainError : public LabError {
 public:
  using LabError::LabError;
};

class UndefinedCoefficient : public LabError {
 public:
  using LabError::LabError;
};

class ZeroCoefficient : public LabError {
 public:
  using LabError::LabError;
};

class ParseError : public LabError {
 public:
  using LabError::LabError;
};

// Raised when an internal consistency assertion fails (a malformed tiling,
// a disconnected move graph). Seeing one means a bug or a falsified claim.
class InvariantViolation : public LabError {
 public:
  using LabError::LabError;
};

}  // namespace nlab
