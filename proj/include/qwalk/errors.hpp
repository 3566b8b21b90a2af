#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Caller violated an operation's precondition (bad n, j, degree, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree did not, or an exact division left a
/// remainder. Indicates a bug or a false identity, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Numeric work at the current precision could not be certified; retry
/// with more bits.
class PrecisionEscalation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The precision ceiling was reached without certification.
class PrecisionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
