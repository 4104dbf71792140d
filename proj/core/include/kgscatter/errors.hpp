#pragma once

#include <stdexcept>
#include <string>

namespace kgscatter {

/// Base class for every failure raised while evaluating a special function,
/// a closed form, or the ODE oracle.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain an operation supports (e.g. W0 below -1/e,
/// HeunC series outside the unit disk).
class DomainError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Gamma-function pole or a vanishing recurrence denominator.
class PoleError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Series or iteration failed to meet its stopping rule within the cap.
class ConvergenceError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// A closed-form coefficient diverges at this energy (mu = -nu).
class SingularityError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Physically invalid input record (m <= 0, E <= m, ...).
class InvalidConfig : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kgscatter
