#pragma once
#include <stdexcept>
#include <string>

namespace fresnelkit {

// Argument outside the mathematical domain (t <= 0, x < 0 on a half-line, r >= R, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A series ran out of terms before the stopping rule fired.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument is mathematically fine but outside the region where the chosen evaluator keeps double precision.
struct RangeError : std::range_error {
    using std::range_error::range_error;
};

struct OverflowError : RangeError {
    using RangeError::RangeError;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergenceError : NonConvergence {
    using NonConvergence::NonConvergence;
};

// Infinite tail requested for an amplitude with no usable decay.
struct UnsupportedTail : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EnvelopeMissing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionGuard : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace fresnelkit
