#pragma once

#include <stdexcept>
#include <string>

namespace carlson {

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Shape parameter outside the monotonicity regime an operation requires.
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Numerator γ + (1+x)^β of the three-parameter family vanishes on (0,1).
class SingularFamilyError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace carlson
