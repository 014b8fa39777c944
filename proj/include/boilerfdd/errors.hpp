#pragma once

#include <stdexcept>
#include <string>

namespace boilerfdd {

// Invalid domain object (negative area, hhv <= lhv, uncalibrated spec, ...).
class SpecError : public std::invalid_argument {
public:
    explicit SpecError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad run configuration (empty grid axis, even filter window, unknown flag value, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed or inconsistent data files / datasets (unknown label, missing column, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested flue-gas composition cannot be reached for any excess-air level.
class UnreachableTargetError : public std::domain_error {
public:
    explicit UnreachableTargetError(const std::string& msg) : std::domain_error(msg) {}
};

// Vapor partial pressure at or above total pressure.
class SaturationError : public std::domain_error {
public:
    explicit SaturationError(const std::string& msg) : std::domain_error(msg) {}
};

// No bracket for the gas-side coefficient, or a thermodynamically impossible target.
class CalibrationError : public std::runtime_error {
public:
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iteration cap hit; carries the best iterate seen so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double best_iterate)
        : std::runtime_error(msg), best_iterate_(best_iterate) {}
    double best_iterate() const { return best_iterate_; }

private:
    double best_iterate_;
};

// Evaluation asked for something the model has never seen (unknown test class).
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace boilerfdd
