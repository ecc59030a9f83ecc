#include "vanetsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vanetsim {

MobilityParams::MobilityParams(double beta_, double mu_, double sigma_)
    : beta(beta_), mu(mu_), sigma(sigma_) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::domain_error("MobilityParams: beta must be > 0");
    }
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw std::domain_error("MobilityParams: mu must be >= 0");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::domain_error("MobilityParams: sigma must be >= 0");
    }
    a = 2.0 * sigma * sigma / (beta * beta);
}

Moments moments(double t, const MobilityParams& p) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::domain_error("moments: t must be finite and >= 0");
    }
    double variance = p.a * (p.beta * t - 1.0 + std::exp(-p.beta * t));
    return {p.mu * t, std::max(variance, 0.0)};
}

namespace {

void require_positive_time(double t, const char* who) {
    if (!std::isfinite(t) || t <= 0.0) {
        throw std::domain_error(std::string(who) + ": t must be > 0");
    }
}

} // namespace

double pdf_distance(const AnalyticQuery& q, const MobilityParams& p) {
    require_positive_time(q.t, "pdf_distance");
    if (!std::isfinite(q.r)) {
        throw std::domain_error("pdf_distance: r must be finite");
    }
    auto [mean, var] = moments(q.t, p);
    double d = q.r - mean;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * M_PI * var);
}

double cdf_distance(const AnalyticQuery& q, const MobilityParams& p) {
    require_positive_time(q.t, "cdf_distance");
    if (!(q.r >= 0.0)) {
        throw std::domain_error("cdf_distance: r must be >= 0");
    }
    double t = q.t;
    double mass = integrate([&](double y) { return pdf_distance({y, t}, p); }, 0.0, q.r);
    return std::clamp(mass, 0.0, 1.0);
}

double comm_density(const AnalyticQuery& q, const MobilityParams& p) {
    require_positive_time(q.t, "comm_density");
    double var = p.a * (p.beta * q.t - 1.0 + std::exp(-p.beta * q.t));
    double omega = std::sqrt(2.0 * M_PI * var);
    double d = q.r - p.mu * q.t;
    double gamma = std::exp(-d * d / (2.0 * var));
    return gamma / omega;
}

double comm_probability(double r, double t, const MobilityParams& p) {
    require_positive_time(t, "comm_probability");
    if (!(r >= 0.0)) {
        throw std::domain_error("comm_probability: r must be >= 0");
    }
    double mass = integrate([&](double z) { return comm_density({z, t}, p); }, 0.0, r);
    return std::clamp(mass, 0.0, 1.0);
}

double efficiency(double r, double t, const MobilityParams& p) {
    return 100.0 * comm_probability(r, t, p);
}

double conditional_pdf(const AnalyticQuery& q, const MobilityParams& p, double range_r) {
    if (!(q.r < range_r)) {
        throw std::domain_error("conditional_pdf: requires r < radio range R");
    }
    double denom = comm_probability(q.r, q.t, p);
    if (denom < kConditionalFloor) {
        throw DegenerateConditionError("conditional_pdf: communication probability below floor");
    }
    return comm_density(q, p) / denom;
}

double time_averaged_pdf(double r, double t, const MobilityParams& p) {
    require_positive_time(t, "time_averaged_pdf");
    if (!(r >= 0.0)) {
        throw std::domain_error("time_averaged_pdf: r must be >= 0");
    }
    auto ratio = [&](double z) {
        if (z <= 0.0) return 0.0;
        double denom = comm_probability(r, z, p);
        if (denom < kConditionalFloor) return 0.0;
        return comm_density({r, z}, p) / denom;
    };
    // tolerance scaled with the interval so the average meets ~1e-9 absolute
    QuadratureOptions opts;
    opts.tol = 1e-9 * std::max(1.0, t);
    return integrate(ratio, 0.0, t, opts) / t;
}

double steady_state_pdf(double r, const MobilityParams& p, double tol,
                        const SteadyStateOptions& opts) {
    if (!(tol > 0.0)) {
        throw std::domain_error("steady_state_pdf: tol must be > 0");
    }
    if (!(opts.t_start > 0.0) || !(opts.t_max >= opts.t_start)) {
        throw std::domain_error("steady_state_pdf: invalid horizon options");
    }
    double t = opts.t_start;
    double prev = time_averaged_pdf(r, t, p);
    while (t * 2.0 <= opts.t_max) {
        t *= 2.0;
        double cur = time_averaged_pdf(r, t, p);
        double scale = std::max(std::fabs(cur), 1e-300);
        if (std::fabs(cur - prev) < tol * scale) {
            return cur;
        }
        prev = cur;
    }
    throw ConvergenceError("steady_state_pdf: no convergence within horizon t_max", prev);
}

} // namespace vanetsim
