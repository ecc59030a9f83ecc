#pragma once

#include <cstdint>
#include <vector>

#include "vanetsim/analytic.hpp"
#include "vanetsim/rng.hpp"

namespace vanetsim {

/// One walker of the epoch process: piecewise-constant speed, epoch durations
/// exponential(beta), speeds normal(mu, sigma).
struct EpochWalker {
    double position = 0.0;
    double current_speed = 0.0;
    double epoch_remaining = 0.0;
    MobilityParams params;
};

EpochWalker make_walker(const MobilityParams& p, Rng& rng);

/// Advances the walker by dt, consuming epoch fragments as they expire.
void epoch_advance(EpochWalker& w, double dt, Rng& rng);

/// Four-lane bidirectional highway; lanes 0-1 drive forward, 2-3 reverse.
struct HighwayScenario {
    std::uint32_t node_count = 50;
    double speed_mps = 15.0;
    double length_m = 1500.0;
    double lane_width_m = 5.0;
    int lanes = 4;
    bool wrap = true;
};

/// Per-node kinematic state on the highway.
struct LanePosition {
    int lane = 0;
    double x = 0.0;
};

/// Uniform per-lane placement; node count split evenly across lanes with the
/// remainder going to the lower lanes. Deterministic under the rng seed.
std::vector<LanePosition> initial_placement(const HighwayScenario& s, Rng& rng);

/// Advances every node by speed*dt in its lane direction; wrap re-enters at
/// the opposite end of the same lane.
void highway_step(const HighwayScenario& s, std::vector<LanePosition>& state, double dt);

/// Plane coordinates of a lane position (lane center line).
inline double lane_center_y(const HighwayScenario& s, int lane) {
    return (lane + 0.5) * s.lane_width_m;
}

} // namespace vanetsim
