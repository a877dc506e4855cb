#pragma once

#include <stdexcept>
#include <string>

namespace qpulse {

// Operand shapes do not agree.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix expected to be positive semidefinite has a significantly negative
// eigenvalue.
struct PositivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Invalid user-facing configuration (maps to CLI exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integration produced NaN/Inf or lost positivity (maps to CLI exit code 3).
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The observable is not defined for this model (e.g. entropy production of a
// multi-reservoir model).
struct UnsupportedConfiguration : std::logic_error {
  using std::logic_error::logic_error;
};

// The state violates a structural assumption of the model.
struct ModelViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qpulse
