#pragma once

#include <stdexcept>
#include <string>

namespace semigrav {

/// Input outside the mathematical domain of an operation (e.g. B <= 0, dip depth >= 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inconsistent or invalid run configuration (step size, band limits, thresholds, units).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lookup of an unknown key (material symbol, prescription name).
class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A bounded search (tau_min) that did not reach its target.
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace semigrav
