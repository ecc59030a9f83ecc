#pragma once

#include <vector>

#include "vanetsim/errors.hpp"
#include "vanetsim/rng.hpp"

namespace vanetsim {

/// Distance-banded Nakagami shape schedule: shapes[i] applies below
/// breakpoints[i], shapes.back() beyond the last breakpoint.
struct NakagamiSchedule {
    std::vector<double> breakpoints_m{80.0, 200.0};
    std::vector<double> shapes{3.0, 1.5, 1.0};

    void validate() const;
    double shape_at(double d) const;
};

struct RadioParams {
    double tx_power_w = 0.1;     ///< transmit power, W, > 0
    double gain_tx = 1.0;        ///< transmitter antenna gain, > 0
    double gain_rx = 1.0;        ///< receiver antenna gain, > 0
    double wavelength_m = 0.0508;///< carrier wavelength, m, > 0
    double path_loss_exp = 2.0;  ///< log-distance exponent n, >= 1
    double d0_m = 1.0;           ///< reference distance, m, > 0
    double pl_fs_d0_db = 0.0;    ///< free-space path loss at d0, dB, >= 0
    double alpha = 1.0;          ///< attenuation factor in [0, 1]
    double d_min_m = 1.0;        ///< minimal sender-receiver distance, m, > 0
    double range_m = 200.0;      ///< radio range R, m, > 0
    double rx_threshold_w = 0.0; ///< minimum decodable power, W, > 0
    double cs_threshold_w = 0.0; ///< carrier-sense power, W, > 0
    bool literal_eq19 = true;    ///< keep the doubled reference-loss term

    void validate() const;
};

/// Free-space path loss at distance d in dB: 20*log10(4*pi*d/lambda).
double free_space_pl_db(double d, double wavelength_m);

/// Defaults for one MAC family: 2.4 GHz for "802.11", 5.9 GHz for "802.11p";
/// rx threshold set so the fading-free decode range is 250 m, carrier sense
/// 10 dB more sensitive.
RadioParams default_radio_params_dot11();
RadioParams default_radio_params_dot11p();

/// Received power p_tx * lambda^2 * g_tx * g_rx / (16 pi^2 d^2).
/// Rejects d < d_min (near field).
double friis_rx_power(double d, const RadioParams& rp);

/// Transmit/receive power ratio in dB, 10*log10(p_tx / p_rx).
double power_ratio_db(double d, const RadioParams& rp);

/// p_tx * G_link / d^2 with the link gain G_link = g_tx*g_rx*lambda^2/(16 pi^2);
/// algebraically the same quantity as friis_rx_power, computed via the link
/// gain. Its value at d = d_min is the global received-power maximum.
double max_received_power(double d, const RadioParams& rp);

/// alpha * max_received_power(d).
double attenuated_power(double d, const RadioParams& rp);

/// Log-distance path loss in dB. The literal flag keeps the doubled
/// reference-loss term (2*PLfs(d0)); standard mode uses the single term.
/// Rejects d < d0.
double path_loss_db(double d, const RadioParams& rp, bool literal_eq19);
inline double path_loss_db(double d, const RadioParams& rp) {
    return path_loss_db(d, rp, rp.literal_eq19);
}

/// Unique distance whose path_loss_db equals pl; rejects pl below the d0
/// floor. Round-trips with path_loss_db.
double invert_path_loss(double pl_db, const RadioParams& rp, bool literal_eq19);
inline double invert_path_loss(double pl_db, const RadioParams& rp) {
    return invert_path_loss(pl_db, rp, rp.literal_eq19);
}

/// Gamma-distributed fading sample with shape m(d) from the schedule and mean
/// exactly mean_power_w. mean 0 returns 0.
double nakagami_sample(double mean_power_w, double d, const NakagamiSchedule& sched, Rng& rng);

} // namespace vanetsim
