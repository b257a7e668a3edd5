#pragma once

#include <stdexcept>
#include <string>

namespace ebsl {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation received arguments that violate its contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The ODE integrator could not meet its tolerance (step-size underflow).
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double lambda)
      : Error(what), lambda_(lambda) {}
  double lambda() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// The function does not change sign across the supplied bracket.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// A dense system (or one row of the main integral equation) is singular to
/// working precision.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double smallest_pivot)
      : Error(what), smallest_pivot_(smallest_pivot) {}
  double smallest_pivot() const noexcept { return smallest_pivot_; }

 private:
  double smallest_pivot_;
};

/// A product derivative was requested at a point that is also a non-target
/// root, or a proportionality constant k_n vanished.
class DegenerateRootError : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue scan found a different number of roots than expected.
class MissedRootError : public Error {
 public:
  using Error::Error;
};

/// The boundary-coefficient fit is inconsistent (kappa_1 far from -1).
class InconsistentDataError : public Error {
 public:
  using Error::Error;
};

/// The recovered coefficients violate rho = H H1 - H2 > 0.
class InvalidReconstructionError : public Error {
 public:
  using Error::Error;
};

/// Two spectra are supplied in the wrong order or fail to interlace.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a pole of the m-function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Spectral data (or two spectra) failed validation in a pipeline.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace ebsl
