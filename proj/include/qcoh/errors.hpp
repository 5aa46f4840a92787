#pragma once

#include <stdexcept>
#include <string>

namespace qcoh {

// Root of every error raised by the library. Callers that only care about
// "something about the input was wrong" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validation failures carry the worst offending magnitude so diagnostics can
// say how far off an input was, not just that it was off.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double magnitude)
      : Error(what + " (worst offending magnitude " + std::to_string(magnitude) + ")"),
        magnitude_(magnitude) {}
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

class NotSquare : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotHermitian : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotPositive : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class TraceNotOne : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotNormalized : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotTracePreserving : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class UnsupportedLimit : public Error {
 public:
  using Error::Error;
};
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};
class UnknownGenerator : public Error {
 public:
  using Error::Error;
};
class SingularState : public Error {
 public:
  using Error::Error;
};
class BadWeights : public Error {
 public:
  using Error::Error;
};
class NotGio : public Error {
 public:
  using Error::Error;
};
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace qcoh
