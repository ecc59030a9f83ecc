#include "vanetsim/localization.hpp"

#include <algorithm>
#include <cmath>

namespace vanetsim {

namespace {

double dist(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

constexpr double kClampSlack = 1e-12;

} // namespace

void LocalizationObservation::validate() const {
    if (!(l > 0.0)) {
        throw InconsistentObservationError("observation: probe separation L must be > 0");
    }
    if (!(x1 >= 10.0 * l) || !(x2 >= 10.0 * l)) {
        throw InconsistentObservationError("observation: far-field requires x1, x2 >= 10 L");
    }
    if (std::fabs(x2 - x1) > l * (1.0 + kClampSlack)) {
        throw InconsistentObservationError("observation: |x2 - x1| exceeds L");
    }
}

double estimate_bearing(const LocalizationObservation& obs) {
    if (!(obs.l > 0.0)) {
        throw InconsistentObservationError("estimate_bearing: L must be > 0");
    }
    double arg = (obs.x2 - obs.x1) / obs.l;
    if (std::fabs(arg) > 1.0 + kClampSlack) {
        throw InconsistentObservationError("estimate_bearing: |x2 - x1| exceeds L");
    }
    arg = std::clamp(arg, -1.0, 1.0);
    return std::acos(arg);
}

std::array<Vec2, 2> candidate_positions(const Vec2& anchor, double d, double phi) {
    if (!(d > 0.0)) {
        throw std::domain_error("candidate_positions: d must be > 0");
    }
    double s = d * std::sin(phi);
    double c = d * std::cos(phi);
    return {Vec2{anchor.x + s, anchor.y + c}, Vec2{anchor.x - s, anchor.y + c}};
}

int disambiguate(const std::array<Vec2, 2>& candidates, double trend_probe_db) {
    if (trend_probe_db > 0.0) return 0;
    if (trend_probe_db < 0.0) return 1;
    bool coincide = candidates[0].x == candidates[1].x && candidates[0].y == candidates[1].y;
    if (coincide) return 0;
    throw AmbiguousObservationError("disambiguate: zero probe with distinct candidates");
}

std::pair<double, double> measure_distances(const SyntheticScene& scene, Rng& rng) {
    double d1 = dist(scene.sender, scene.a1);
    double d2 = dist(scene.sender, scene.a2);
    double pl1 = path_loss_db(d1, scene.radio);
    double pl2 = path_loss_db(d2, scene.radio);
    if (scene.noise_db > 0.0) {
        pl1 += uniform_range(rng, -scene.noise_db, scene.noise_db);
        pl2 += uniform_range(rng, -scene.noise_db, scene.noise_db);
    }
    return {invert_path_loss(pl1, scene.radio), invert_path_loss(pl2, scene.radio)};
}

LocalizationResult localize(const SyntheticScene& scene, Rng& rng) {
    double l = dist(scene.a1, scene.a2);
    auto [x1, x2] = measure_distances(scene, rng);

    LocalizationObservation obs;
    obs.x1 = x1;
    obs.x2 = x2;
    obs.l = l;
    obs.anchor = Vec2{0.5 * (scene.a1.x + scene.a2.x), 0.5 * (scene.a1.y + scene.a2.y)};
    obs.validate();

    double phi = estimate_bearing(obs);
    double d = 0.5 * (x1 + x2);

    // local frame: +y from A2 toward A1, +x its left-hand perpendicular;
    // the candidate pair covers both perpendicular choices
    Vec2 yhat{(scene.a1.x - scene.a2.x) / l, (scene.a1.y - scene.a2.y) / l};
    Vec2 xhat{-yhat.y, yhat.x};
    double s = d * std::sin(phi);
    double c = d * std::cos(phi);
    std::array<Vec2, 2> candidates = {
        Vec2{obs.anchor.x + s * xhat.x + c * yhat.x, obs.anchor.y + s * xhat.y + c * yhat.y},
        Vec2{obs.anchor.x - s * xhat.x + c * yhat.x, obs.anchor.y - s * xhat.y + c * yhat.y},
    };

    // fading-free strength trend of one probe step toward candidate 0
    double step = scene.probe_step_m > 0.0 ? scene.probe_step_m : l;
    double toward0 = dist(candidates[0], obs.anchor);
    Vec2 probe_point = obs.anchor;
    if (toward0 > 0.0) {
        probe_point.x += step * (candidates[0].x - obs.anchor.x) / toward0;
        probe_point.y += step * (candidates[0].y - obs.anchor.y) / toward0;
    }
    double p_before = friis_rx_power(std::max(dist(scene.sender, obs.anchor), scene.radio.d_min_m),
                                     scene.radio);
    double p_after = friis_rx_power(std::max(dist(scene.sender, probe_point), scene.radio.d_min_m),
                                    scene.radio);
    double probe_db = 10.0 * std::log10(p_after / p_before);
    obs.trend_probe_db = probe_db;

    LocalizationResult res;
    res.distance = d;
    res.phi = phi;
    res.candidates = candidates;
    res.chosen = disambiguate(candidates, probe_db);
    return res;
}

} // namespace vanetsim
