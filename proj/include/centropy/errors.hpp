#pragma once

#include <stdexcept>
#include <string>

namespace centropy {

/// Coarse error category; the CLI maps these onto exit codes
/// (io -> 1, validation -> 2, domain -> 3).
enum class ErrorCategory { io, validation, domain };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorCategory::io, message) {}
};

/// File content could not be parsed at all (bad JSON, bad CSV, bad number).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(ErrorCategory::validation, message) {}
};

/// File parsed but does not match the documented schema (missing or unknown fields).
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message) : Error(ErrorCategory::validation, message) {}
};

/// A structural invariant does not hold.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorCategory::validation, message) {}
};

class InvalidMachine : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyCluster : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NegativeInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AsymmetricMatrix : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateSeries : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InsufficientData : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidR : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownBenchmark : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownManufacturer : public Error {
 public:
  explicit UnknownManufacturer(const std::string& message)
      : Error(ErrorCategory::domain, message) {}
};

}  // namespace centropy
