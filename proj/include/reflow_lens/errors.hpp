#pragma once

#include <stdexcept>
#include <string>

namespace reflow {

/// Input outside the mathematical domain of an operation (bad angle, non-positive length, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Too few samples or calibration points to fit.
class InsufficientData : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Spin calibration produced a non-negative exponent.
class NonPhysicalFit : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Circle fit on collinear (or numerically collinear) samples.
class DegenerateFit : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Fitted circle does not describe a cap above the base plane.
class ProfileInconsistent : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Young's equation has no solution for the given energies.
class NoEquilibriumAngle : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input file (CSV or recipe JSON). Not a domain error.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reflow
