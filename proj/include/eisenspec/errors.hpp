#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace eisenspec {

/// Base class for precondition violations on numeric inputs. The CLI maps
/// every DomainError to exit status 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument sits inside the exclusion disc of a pole (or removable limit).
class PoleProximityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative scheme (reduction, extrapolation, refinement) did not settle.
class ConvergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A NaN or infinity would otherwise have escaped a public operation.
class NonFiniteError : public DomainError {
public:
    using DomainError::DomainError;
};

std::complex<double> require_finite(std::complex<double> value, const char* what);
double require_finite(double value, const char* what);

}  // namespace eisenspec
