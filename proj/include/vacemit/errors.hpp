#pragma once

#include <stdexcept>
#include <string>

namespace vacemit {

/// Base of every error raised by the library. Model and fit failures derive
/// from ModelError; malformed input text derives from ParseError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class BreakdownViolation : public ModelError {
 public:
  BreakdownViolation(double field, double limit);
  double field() const { return field_; }
  double limit() const { return limit_; }

 private:
  double field_;
  double limit_;
};

class NeverTurnsOn : public ModelError {
 public:
  using ModelError::ModelError;
};

class InconsistentMeasurement : public ModelError {
 public:
  using ModelError::ModelError;
};

class InsufficientData : public ModelError {
 public:
  using ModelError::ModelError;
};

class SingularFit : public ModelError {
 public:
  using ModelError::ModelError;
};

class UnphysicalFit : public ModelError {
 public:
  using ModelError::ModelError;
};

class NonConvergence : public ModelError {
 public:
  NonConvergence(const std::string& what, double last_c, double last_b, int iterations)
      : ModelError(what), last_c_(last_c), last_b_(last_b), iterations_(iterations) {}
  double last_prefactor() const { return last_c_; }
  double last_slope() const { return last_b_; }
  int iterations() const { return iterations_; }

 private:
  double last_c_;
  double last_b_;
  int iterations_;
};

/// Malformed CSV or config text. Line and column are 1-based; column 0 means
/// the whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace vacemit
