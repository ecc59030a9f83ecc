#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vanetsim/mac.hpp"
#include "vanetsim/rng.hpp"

namespace vanetsim {

enum class Protocol { Dsdv, Olsr, Dymo, ModDsdv, ModOlsr, ModDymo };

Protocol protocol_from_string(const std::string& name);
std::string to_string(Protocol p);
bool is_mod_preset(Protocol p);
Protocol base_protocol(Protocol p);

/// Control-plane timer bundle shared by the three protocols. The MOD presets
/// scale exactly the fields they name and nothing else.
struct ProtocolTimers {
    double dsdv_periodic_s = 15.0;
    double dsdv_trigger_min_gap_s = 1.0;
    double dsdv_settling_s = 6.0;
    double olsr_hello_s = 2.0;
    double olsr_tc_s = 5.0;
    double dymo_route_timeout_s = 5.0;
    double dymo_rreq_wait_s = 1.0;
    int dymo_rreq_tries = 3;

    bool operator==(const ProtocolTimers&) const = default;
    void validate() const;
};

/// MOD_DSDV doubles the DSDV periodic/trigger/settling timers; MOD_OLSR
/// halves HELLO and TC intervals; MOD_DYMO halves route timeout and RREQ
/// wait. Rejects non-MOD protocols.
ProtocolTimers apply_mod_preset(const ProtocolTimers& base, Protocol preset);

/// Timers a run actually uses: base timers, with the MOD preset applied when
/// the protocol is one.
ProtocolTimers timers_for(Protocol p, const ProtocolTimers& base);

inline constexpr std::uint16_t kInfMetric = 0xffff;

struct RouteEntry {
    NodeId dest = 0;
    NodeId next_hop = 0;
    std::uint16_t metric = 0;
    std::uint32_t seq = 0;
    double installed_at = 0.0;
    double expires_at = 0.0;
};

enum class CtrlKind : std::uint8_t { DsdvUpdate, Hello, Tc, Rreq, Rrep, Rerr };
std::string to_string(CtrlKind k);

struct DsdvRouteAd {
    NodeId dest;
    std::uint32_t seq;
    std::uint16_t metric;
};
struct DsdvUpdateBody {
    std::vector<DsdvRouteAd> routes;
    bool full_dump = false;
};
struct HelloBody {
    std::vector<NodeId> sym_neighbors;
    std::vector<NodeId> heard_neighbors;
    std::vector<NodeId> mprs;
};
struct TcBody {
    std::vector<NodeId> selectors;
    std::uint16_t ansn = 0;
};
struct RreqBody {
    NodeId origin;
    NodeId target;
    std::uint32_t origin_seq;
    std::uint16_t metric;
};
struct RrepBody {
    NodeId rreq_origin; ///< node the reply travels back to
    NodeId target;      ///< destination being answered
    std::uint32_t target_seq;
    std::uint16_t metric;
};
struct RerrBody {
    std::vector<std::pair<NodeId, std::uint32_t>> unreachable; ///< (dest, seq)
};

struct ControlMessage {
    CtrlKind kind = CtrlKind::Hello;
    NodeId origin = 0;
    std::uint32_t seq = 0;    ///< per (origin, kind), strictly increasing
    std::uint8_t hop_limit = 1;
    std::variant<DsdvUpdateBody, HelloBody, TcBody, RreqBody, RrepBody, RerrBody> body;

    std::uint32_t wire_bytes() const;
};

struct ForwardData {
    NodeId next_hop;
};
struct BufferedData {};
struct NoRouteData {};
using DataVerdict = std::variant<ForwardData, BufferedData, NoRouteData>;

enum class BufferDrop { Unreachable, Overflow };

/// Engine services a routing agent relies on. One env belongs to one node of
/// one single-threaded run.
class RouterEnv {
public:
    virtual ~RouterEnv() = default;
    virtual double now() const = 0;
    virtual NodeId self() const = 0;
    virtual Rng& rng() = 0;
    /// Hands a control message to the MAC (mac_dst may be kBroadcast); every
    /// call is one hop-transmission for the routing-load metric.
    virtual void send_control(const ControlMessage& msg, NodeId mac_dst) = 0;
    virtual void schedule(double delay, std::uint64_t tag) = 0;
    /// Buffered-packet resolution callbacks (reactive protocols).
    virtual void forward_buffered(std::uint64_t packet_id, NodeId next_hop) = 0;
    virtual void drop_buffered(std::uint64_t packet_id, BufferDrop reason) = 0;
};

class RoutingAgent {
public:
    virtual ~RoutingAgent() = default;
    virtual void start() = 0;
    virtual void on_timer(std::uint64_t tag) = 0;
    virtual void on_control(const ControlMessage& msg, NodeId from) = 0;
    virtual void on_link_failure(NodeId neighbor) = 0;
    /// Routing decision for a data packet leaving this node.
    virtual DataVerdict on_data(NodeId dest, std::uint64_t packet_id) = 0;
    /// Snapshot of currently valid routes.
    virtual std::vector<RouteEntry> routes() const = 0;
    /// Packets dropped as destination-unreachable (reactive protocols).
    virtual std::uint64_t unreachable_drops() const { return 0; }
};

std::unique_ptr<RoutingAgent> make_agent(Protocol p, const ProtocolTimers& timers_with_preset,
                                         RouterEnv& env);

/// OLSR multipoint-relay selection: returns the subset of one-hop neighbors
/// covering every strict two-hop neighbor. Greedy: first the neighbors that
/// uniquely cover someone, then repeatedly the one covering the most still
/// uncovered (ties to the lower node id).
std::vector<NodeId> olsr_select_mprs(NodeId self, const std::vector<NodeId>& one_hop,
                                     const std::map<NodeId, std::vector<NodeId>>& two_hop_adj);

} // namespace vanetsim
