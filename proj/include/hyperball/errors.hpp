#pragma once

#include <stdexcept>
#include <string>

namespace hyperball {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// A series, continued fraction or quadrature ran out of budget before
/// meeting its stopping rule.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace hyperball
