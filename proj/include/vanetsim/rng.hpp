#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vanetsim {

using Rng = std::mt19937_64;

/// Derives an independent engine for (seed, stream). Streams with distinct ids
/// are decorrelated via splitmix64 so one run can own many reproducible
/// sub-streams (fading, backoff, traffic, ...) without sharing state.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return Rng(z);
}

// Hand-rolled variate transforms. <random> distributions are
// implementation-defined, these keep streams identical across toolchains.

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_range(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, n). n must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    // multiply-shift; bias is < 2^-64 per draw, irrelevant at simulation scale
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
    return static_cast<std::uint64_t>(m >> 64);
}

/// Exponential with rate lambda (mean 1/lambda).
inline double exponential(Rng& rng, double rate) {
    return -std::log1p(-uniform01(rng)) / rate;
}

/// Normal via Box-Muller; uses two uniforms per draw.
inline double normal(Rng& rng, double mean, double stddev) {
    double u1 = 1.0 - uniform01(rng); // (0, 1]
    double u2 = uniform01(rng);
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return mean + stddev * z;
}

/// Gamma(shape, scale) via Marsaglia-Tsang, with the shape<1 boost.
inline double gamma(Rng& rng, double shape, double scale) {
    if (shape < 1.0) {
        double u = uniform01(rng);
        return gamma(rng, shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal(rng, 0.0, 1.0);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

} // namespace vanetsim
