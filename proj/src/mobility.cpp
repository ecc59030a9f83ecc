#include "vanetsim/mobility.hpp"

#include <algorithm>
#include <cmath>

#include "vanetsim/errors.hpp"

namespace vanetsim {

EpochWalker make_walker(const MobilityParams& p, Rng& rng) {
    EpochWalker w;
    w.params = p;
    w.current_speed = normal(rng, p.mu, p.sigma);
    w.epoch_remaining = exponential(rng, p.beta);
    return w;
}

void epoch_advance(EpochWalker& w, double dt, Rng& rng) {
    if (!(dt > 0.0)) {
        throw std::domain_error("epoch_advance: dt must be > 0");
    }
    while (dt > 0.0) {
        double step = std::min(dt, w.epoch_remaining);
        w.position += w.current_speed * step;
        w.epoch_remaining -= step;
        dt -= step;
        if (w.epoch_remaining <= 0.0) {
            w.current_speed = normal(rng, w.params.mu, w.params.sigma);
            w.epoch_remaining = exponential(rng, w.params.beta);
        }
    }
}

std::vector<LanePosition> initial_placement(const HighwayScenario& s, Rng& rng) {
    if (s.node_count < 2) {
        throw ConfigError("initial_placement: need at least 2 nodes");
    }
    std::vector<LanePosition> out;
    out.reserve(s.node_count);
    std::uint32_t base = s.node_count / s.lanes;
    std::uint32_t rem = s.node_count % s.lanes;
    for (int lane = 0; lane < s.lanes; ++lane) {
        std::uint32_t n = base + (static_cast<std::uint32_t>(lane) < rem ? 1 : 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            out.push_back({lane, uniform_range(rng, 0.0, s.length_m)});
        }
    }
    return out;
}

void highway_step(const HighwayScenario& s, std::vector<LanePosition>& state, double dt) {
    if (!(dt > 0.0)) {
        throw std::domain_error("highway_step: dt must be > 0");
    }
    for (auto& n : state) {
        bool forward = n.lane < s.lanes / 2;
        double x = n.x + (forward ? s.speed_mps : -s.speed_mps) * dt;
        if (s.wrap) {
            x = std::fmod(x, s.length_m);
            if (x < 0.0) x += s.length_m;
        } else {
            x = std::clamp(x, 0.0, s.length_m);
        }
        n.x = x;
    }
}

} // namespace vanetsim
