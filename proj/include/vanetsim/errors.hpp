#pragma once

#include <stdexcept>
#include <string>

namespace vanetsim {

/// Numerical integration gave up before reaching the requested tolerance.
/// Carries the best estimate accumulated so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
    double best_estimate() const { return best_estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// An iterative scheme ran out of horizon before its stopping rule fired.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_value)
        : std::runtime_error(what), last_value_(last_value) {}
    double last_value() const { return last_value_; }

private:
    double last_value_;
};

/// Conditional density requested where its normalizing mass is effectively zero.
class DegenerateConditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distance pair that no far-field sender geometry can produce.
class InconsistentObservationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signal-strength probe cannot separate two distinct candidate positions.
class AmbiguousObservationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or out-of-domain configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vanetsim
