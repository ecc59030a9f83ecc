#pragma once

#include <functional>

#include "vanetsim/errors.hpp"

namespace vanetsim {

struct QuadratureOptions {
    double tol = 1e-9;  ///< absolute error target for the whole interval
    int max_depth = 60; ///< bisection depth limit per branch
    int min_depth = 5;  ///< forced bisection depth before accepting an estimate
};

/// Adaptive composite Simpson quadrature of f over [a, b].
///
/// Bisects intervals until the local Richardson error estimate meets the
/// tolerance share of the interval; the forced minimum depth protects against
/// integrands whose structure is invisible to the first coarse samples.
/// Throws std::domain_error if a > b or f evaluates non-finite, and
/// QuadratureError (carrying the best estimate) if max_depth is exceeded.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts);

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-9) {
    QuadratureOptions opts;
    opts.tol = tol;
    return integrate(f, a, b, opts);
}

} // namespace vanetsim
