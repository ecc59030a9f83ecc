#include "vanetsim/mac.hpp"

namespace vanetsim {

MacStandard mac_standard_from_string(const std::string& name) {
    if (name == "802.11") return MacStandard::Dot11;
    if (name == "802.11p") return MacStandard::Dot11p;
    throw ConfigError("unknown MAC type '" + name + "'; expected one of {802.11, 802.11p}");
}

std::string to_string(MacStandard mac) {
    return mac == MacStandard::Dot11 ? "802.11" : "802.11p";
}

void MacProfile::validate() const {
    if (!(bitrate_bps > 0.0)) throw ConfigError("mac: bitrate_bps must be > 0");
    if (!(slot_s > 0.0) || !(sifs_s > 0.0)) throw ConfigError("mac: slot/sifs must be > 0");
    if (cw_min > cw_max) throw ConfigError("mac: cw_min must be <= cw_max");
    if (retry_limit < 0) throw ConfigError("mac: retry_limit must be >= 0");
    if (!(preamble_s >= 0.0)) throw ConfigError("mac: preamble_s must be >= 0");
}

MacProfile profile_for(MacStandard standard) {
    MacProfile p;
    p.standard = standard;
    if (standard == MacStandard::Dot11) {
        p.bitrate_bps = 2e6;
        p.slot_s = 20e-6;
        p.sifs_s = 10e-6;
        p.cw_min = 31;
        p.cw_max = 1023;
        p.retry_limit = 7;
        p.preamble_s = 192e-6;
        p.association_required = true;
    } else {
        p.bitrate_bps = 6e6;
        p.slot_s = 13e-6;
        p.sifs_s = 32e-6;
        p.cw_min = 15;
        p.cw_max = 1023;
        p.retry_limit = 7;
        p.preamble_s = 40e-6;
        p.association_required = false;
    }
    p.difs_s = p.sifs_s + 2.0 * p.slot_s;
    return p;
}

MacProfile profile_for(const std::string& name) {
    return profile_for(mac_standard_from_string(name));
}

double frame_airtime(const MacProfile& p, std::uint32_t payload_bytes) {
    return p.preamble_s + payload_bytes * 8.0 / p.bitrate_bps;
}

} // namespace vanetsim
