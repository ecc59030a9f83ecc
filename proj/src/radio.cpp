#include "vanetsim/radio.hpp"

#include <cmath>

namespace vanetsim {

void NakagamiSchedule::validate() const {
    if (shapes.size() != breakpoints_m.size() + 1) {
        throw ConfigError("NakagamiSchedule: need breakpoints.len + 1 shapes");
    }
    for (std::size_t i = 1; i < breakpoints_m.size(); ++i) {
        if (!(breakpoints_m[i] > breakpoints_m[i - 1])) {
            throw ConfigError("NakagamiSchedule: breakpoints must be ascending");
        }
    }
    for (double m : shapes) {
        if (!(m >= 0.5)) {
            throw ConfigError("NakagamiSchedule: all shapes must be >= 0.5");
        }
    }
}

double NakagamiSchedule::shape_at(double d) const {
    std::size_t band = 0;
    while (band < breakpoints_m.size() && d >= breakpoints_m[band]) ++band;
    return shapes[band];
}

void RadioParams::validate() const {
    if (!(tx_power_w > 0.0)) throw ConfigError("radio: tx_power_w must be > 0");
    if (!(gain_tx > 0.0) || !(gain_rx > 0.0)) throw ConfigError("radio: gains must be > 0");
    if (!(wavelength_m > 0.0)) throw ConfigError("radio: wavelength_m must be > 0");
    if (!(path_loss_exp >= 1.0)) throw ConfigError("radio: path_loss_exp must be >= 1");
    if (!(d0_m > 0.0)) throw ConfigError("radio: d0_m must be > 0");
    if (!(pl_fs_d0_db >= 0.0)) throw ConfigError("radio: pl_fs_d0_db must be >= 0");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("radio: alpha must be in [0, 1]");
    if (!(d_min_m > 0.0)) throw ConfigError("radio: d_min_m must be > 0");
    if (!(range_m > 0.0)) throw ConfigError("radio: range_m must be > 0");
    if (!(d_min_m <= range_m)) throw ConfigError("radio: d_min_m must be <= range_m");
    if (!(rx_threshold_w > 0.0)) throw ConfigError("radio: rx_threshold_w must be > 0");
    if (!(cs_threshold_w > 0.0)) throw ConfigError("radio: cs_threshold_w must be > 0");
}

double free_space_pl_db(double d, double wavelength_m) {
    return 20.0 * std::log10(4.0 * M_PI * d / wavelength_m);
}

RadioParams default_radio_params_dot11() {
    RadioParams rp;
    rp.wavelength_m = 0.125;
    rp.pl_fs_d0_db = free_space_pl_db(rp.d0_m, rp.wavelength_m);
    rp.rx_threshold_w = rp.tx_power_w * rp.wavelength_m * rp.wavelength_m /
                        (16.0 * M_PI * M_PI * 250.0 * 250.0);
    rp.cs_threshold_w = rp.rx_threshold_w / 10.0;
    return rp;
}

RadioParams default_radio_params_dot11p() {
    RadioParams rp;
    rp.wavelength_m = 0.0508;
    rp.pl_fs_d0_db = free_space_pl_db(rp.d0_m, rp.wavelength_m);
    rp.rx_threshold_w = rp.tx_power_w * rp.wavelength_m * rp.wavelength_m /
                        (16.0 * M_PI * M_PI * 250.0 * 250.0);
    rp.cs_threshold_w = rp.rx_threshold_w / 10.0;
    return rp;
}

double friis_rx_power(double d, const RadioParams& rp) {
    if (!(d >= rp.d_min_m)) {
        throw std::domain_error("friis_rx_power: d below minimal distance (near field)");
    }
    double lambda2 = rp.wavelength_m * rp.wavelength_m;
    return rp.tx_power_w * lambda2 * rp.gain_tx * rp.gain_rx / (16.0 * M_PI * M_PI * d * d);
}

double power_ratio_db(double d, const RadioParams& rp) {
    return 10.0 * std::log10(rp.tx_power_w / friis_rx_power(d, rp));
}

double max_received_power(double d, const RadioParams& rp) {
    if (!(d >= rp.d_min_m)) {
        throw std::domain_error("max_received_power: d below minimal distance");
    }
    double g_link = rp.gain_tx * rp.gain_rx * rp.wavelength_m * rp.wavelength_m /
                    (16.0 * M_PI * M_PI);
    return rp.tx_power_w * g_link / (d * d);
}

double attenuated_power(double d, const RadioParams& rp) {
    return rp.alpha * max_received_power(d, rp);
}

double path_loss_db(double d, const RadioParams& rp, bool literal_eq19) {
    if (!(d >= rp.d0_m)) {
        throw std::domain_error("path_loss_db: d below reference distance d0");
    }
    double ref = (literal_eq19 ? 2.0 : 1.0) * rp.pl_fs_d0_db;
    return ref + 10.0 * rp.path_loss_exp * std::log10(d / rp.d0_m);
}

double invert_path_loss(double pl_db, const RadioParams& rp, bool literal_eq19) {
    double ref = (literal_eq19 ? 2.0 : 1.0) * rp.pl_fs_d0_db;
    if (!(pl_db >= ref)) {
        throw std::domain_error("invert_path_loss: pl below the d0 floor");
    }
    return rp.d0_m * std::pow(10.0, (pl_db - ref) / (10.0 * rp.path_loss_exp));
}

double nakagami_sample(double mean_power_w, double d, const NakagamiSchedule& sched, Rng& rng) {
    if (!(mean_power_w >= 0.0)) {
        throw std::domain_error("nakagami_sample: mean power must be >= 0");
    }
    if (mean_power_w == 0.0) return 0.0;
    double m = sched.shape_at(d);
    return gamma(rng, m, mean_power_w / m);
}

} // namespace vanetsim
