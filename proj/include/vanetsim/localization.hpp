#pragma once

#include <array>
#include <optional>

#include "vanetsim/radio.hpp"

namespace vanetsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Two distance estimates taken a track-length L apart, plus the anchor (the
/// midpoint of the probe positions) and the signed signal-strength change of
/// a probe step toward the first candidate.
struct LocalizationObservation {
    double x1 = 0.0;        ///< estimated sender distance at probe A1, m
    double x2 = 0.0;        ///< estimated sender distance at probe A2, m
    double l = 0.0;         ///< probe separation |A2 - A1|, m
    Vec2 anchor;            ///< receiver coordinates at A0 (midpoint of A1 A2)
    double trend_probe_db = 0.0;

    /// Far-field requirement x1, x2 >= 10 L and triangle bound |x2-x1| <= L.
    /// Throws InconsistentObservationError otherwise.
    void validate() const;
};

struct LocalizationResult {
    double distance = 0.0;        ///< (x1 + x2) / 2
    double phi = 0.0;             ///< bearing in [0, pi]
    std::array<Vec2, 2> candidates;
    int chosen = 0;
};

/// Bearing arccos((x2 - x1) / L); the argument is clamped only within
/// 1e-12 floating-point slack, beyond that the observation is rejected.
double estimate_bearing(const LocalizationObservation& obs);

/// The two possible sender positions
///   (x0 + d sin(phi), y0 + d cos(phi)) and (x0 - d sin(phi), y0 + d cos(phi)),
/// expressed in a frame whose +y axis points from probe A2 toward A1.
/// They coincide exactly when sin(phi) = 0.
std::array<Vec2, 2> candidate_positions(const Vec2& anchor, double d, double phi);

/// Chooses candidate 0 when the probe strength rose toward it, candidate 1
/// when it fell. A zero probe is acceptable only when the candidates
/// coincide; otherwise AmbiguousObservationError.
int disambiguate(const std::array<Vec2, 2>& candidates, double trend_probe_db);

/// A synthetic scene: a sender at a known position and a receiver that takes
/// two path-loss readings at A1 and A2 while driving its track.
struct SyntheticScene {
    Vec2 sender;
    Vec2 a1;
    Vec2 a2;
    RadioParams radio;
    double noise_db = 0.0;   ///< half-width of uniform per-reading dB noise
    double probe_step_m = 0.0; ///< 0 -> use the track length L
};

/// Distance estimates (x1, x2) through the path-loss chain; rng supplies the
/// measurement noise when noise_db > 0 (pass any engine when noiseless).
std::pair<double, double> measure_distances(const SyntheticScene& scene, Rng& rng);

/// Full chain: measure, bearing, candidates in the global frame, probe,
/// disambiguation. Throws the component errors on inconsistent geometry.
LocalizationResult localize(const SyntheticScene& scene, Rng& rng);

} // namespace vanetsim
