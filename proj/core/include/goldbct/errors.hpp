#pragma once

#include <stdexcept>
#include <string>

namespace goldbct {

/// Caller violated an operation's precondition (bad argument, wrong regime).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A field could not be built from the requested polynomial.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact-arithmetic identity did not hold (e.g. a character-sum total was
/// not divisible by q^2). Always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A brute-force job exceeds the configured size limit.
class GuardrailError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace goldbct
