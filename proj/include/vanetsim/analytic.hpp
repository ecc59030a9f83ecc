#pragma once

#include <vector>

#include "vanetsim/quadrature.hpp"

namespace vanetsim {

/// Parameters of the epoch mobility process: epoch durations are exponential
/// with rate beta, per-epoch speeds are normal(mu, sigma^2). The derived
/// coefficient a = 2*sigma^2/beta^2 is stored so every formula sees one value.
struct MobilityParams {
    double beta = 1.0;  ///< epoch rate, 1/s, > 0
    double mu = 1.0;    ///< mean speed, m/s
    double sigma = 3.0; ///< speed standard deviation, m/s
    double a = 18.0;    ///< 2*sigma^2/beta^2, m^2

    MobilityParams() = default;
    MobilityParams(double beta_, double mu_, double sigma_);
};

/// A (distance, elapsed-time) evaluation point.
struct AnalyticQuery {
    double r = 0.0; ///< distance from the strip, m
    double t = 0.0; ///< elapsed time, s, > 0 where a density is requested
};

/// Abscissa description for curve exports.
struct CurveSpec {
    double r_min = 0.0;
    double r_max = 200.0;
    int samples = 201;
    double t = 1.0;
};

/// Mean mu*t and variance a*(beta*t - 1 + e^{-beta*t}) of the travelled
/// distance at time t. t = 0 gives the (0, 0) initial condition.
struct Moments {
    double mean;
    double variance;
};
Moments moments(double t, const MobilityParams& p);

/// Density of the travelled distance at time q.t, a normal with the moments
/// above. Rejects q.t <= 0 (zero-variance point mass).
double pdf_distance(const AnalyticQuery& q, const MobilityParams& p);

/// Mass of pdf_distance on [0, q.r], by quadrature. Clamped to [0, 1].
double cdf_distance(const AnalyticQuery& q, const MobilityParams& p);

/// Communication density gamma/omega with omega = sqrt(2*pi*var) and
/// gamma = exp(-(r - mu t)^2 / (2 var)). Identical to pdf_distance; kept as
/// its own evaluation route.
double comm_density(const AnalyticQuery& q, const MobilityParams& p);

/// Probability of communication within distance r at time t: the integral of
/// comm_density over [0, r]. Clamped to [0, 1].
double comm_probability(double r, double t, const MobilityParams& p);

/// Communication efficiency in percent: exactly 100 * comm_probability.
double efficiency(double r, double t, const MobilityParams& p);

/// Floor under the conditional-density denominator; below it the condition
/// is treated as degenerate instead of producing a huge ratio.
inline constexpr double kConditionalFloor = 1e-12;

/// Conditional arrival density comm_density / comm_probability, defined for
/// r < range_r. Throws DegenerateConditionError when the denominator is
/// below kConditionalFloor.
double conditional_pdf(const AnalyticQuery& q, const MobilityParams& p, double range_r);

/// Time average (1/t) * integral over z in (0, t) of the conditional ratio,
/// with the integrand taken as 0 wherever the denominator is degenerate.
double time_averaged_pdf(double r, double t, const MobilityParams& p);

struct SteadyStateOptions {
    double t_start = 10.0;
    double t_max = 65536.0; // 2^16
};

/// Doubling-horizon estimate of the steady-state density: evaluates
/// time_averaged_pdf at t, 2t, 4t, ... until successive values agree to the
/// relative tolerance. Throws ConvergenceError when t_max is reached first.
double steady_state_pdf(double r, const MobilityParams& p, double tol,
                        const SteadyStateOptions& opts = {});

} // namespace vanetsim
