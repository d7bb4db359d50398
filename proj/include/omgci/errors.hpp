#pragma once

#include <stdexcept>
#include <string>

namespace omgci {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a scan finds more than one sign change of dG/dN.
class MultipleStationaryPoints : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by k_threshold when limit_inf(0, tau) <= 0.
class NoThreshold : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace omgci
