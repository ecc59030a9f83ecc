#pragma once

#include <cstdint>
#include <string>

#include "vanetsim/errors.hpp"

namespace vanetsim {

using NodeId = std::uint32_t;
inline constexpr NodeId kBroadcast = 0xffffffffu;

enum class MacStandard { Dot11, Dot11p };

MacStandard mac_standard_from_string(const std::string& name);
std::string to_string(MacStandard mac);

/// Contention and timing constants of one MAC family. difs follows
/// sifs + 2 * slot by construction.
struct MacProfile {
    MacStandard standard = MacStandard::Dot11;
    double bitrate_bps = 2e6;
    double slot_s = 20e-6;
    double sifs_s = 10e-6;
    double difs_s = 50e-6;
    unsigned cw_min = 31;
    unsigned cw_max = 1023;
    int retry_limit = 7;
    double preamble_s = 192e-6;
    bool association_required = true;

    void validate() const;
};

/// Built-in profiles: a 2 Mb/s DSSS-style "802.11" and a 6 Mb/s OCB-style
/// "802.11p" (no association).
MacProfile profile_for(MacStandard standard);
MacProfile profile_for(const std::string& name);

enum class FrameKind : std::uint8_t { Data, RoutingControl, Ack, AssocReq, AssocResp };

inline constexpr std::uint32_t kMaxPayloadBytes = 2304;

struct Frame {
    FrameKind kind = FrameKind::Data;
    NodeId src = 0;
    NodeId dst = kBroadcast;
    std::uint32_t payload_bytes = 0;
    double born_at = 0.0;
    std::uint64_t uid = 0;
    std::uint64_t ref = 0; ///< packet id (Data), acked uid (Ack), message id (control)

    bool broadcast() const { return dst == kBroadcast; }
};

/// On-air duration: preamble plus payload bits at the profile bitrate.
double frame_airtime(const MacProfile& p, std::uint32_t payload_bytes);

} // namespace vanetsim
