#pragma once

#include <stdexcept>
#include <string>

namespace entroconv {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed representation detected while building a value
// (unsorted breakpoints, negative cell value, bad normalization, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

// Invalid argument to an operation (a > b, empty range, unknown name, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// 1-D operation invoked on a 2-D support, or vice versa.
class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

// Filesystem failure (unreadable config, unwritable output path).
class IoError : public Error {
public:
    using Error::Error;
};

// Absolute-continuity requirement violated: the numerator carries mass
// where the denominator vanishes.
class DominationError : public Error {
public:
    using Error::Error;
};

// Adaptive integration ran out of its subdivision budget. Carries the
// best estimate accumulated so far.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& msg, double best_value, double best_error)
        : Error(msg), best_value(best_value), best_error(best_error) {}
    double best_value;
    double best_error;
};

// Running integral of the absolute integrand crossed the divergence cap.
// Carries the accumulated lower bound.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& msg, double lower_bound)
        : Error(msg), lower_bound(lower_bound) {}
    double lower_bound;
};

} // namespace entroconv
