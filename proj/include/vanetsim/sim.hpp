#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "vanetsim/mac.hpp"
#include "vanetsim/mobility.hpp"
#include "vanetsim/radio.hpp"
#include "vanetsim/routing.hpp"

namespace vanetsim {

/// CBR traffic description: `flows` source->sink pairs, each emitting one
/// packet_bytes datagram every interval_s starting at start_s (UDP
/// semantics, no transport retransmission). Explicit flow_pairs override the
/// seeded random selection.
struct TrafficSpec {
    int flows = 5;
    std::uint32_t packet_bytes = 512;
    double interval_s = 0.03;
    double start_s = 0.0;
    std::vector<std::pair<NodeId, NodeId>> flow_pairs;
};

/// Static chain of nodes along the x axis, spacing_m apart.
struct LineScenario {
    std::uint32_t node_count = 10;
    double spacing_m = 100.0;
};

/// Explicit connectivity for protocol-logic studies; received power on an
/// edge is power_scale x rx_threshold, off-edge power is zero.
struct GraphScenario {
    struct Edge {
        NodeId a;
        NodeId b;
        double power_scale = 100.0;
    };
    std::uint32_t node_count = 0;
    std::vector<Edge> edges;
};

using Scenario = std::variant<HighwayScenario, LineScenario, GraphScenario>;

struct FadingSpec {
    bool enabled = true;
    NakagamiSchedule schedule;
};

enum class EvType : std::uint8_t { TxStart, TxEnd, RxOk, RxLost, MacFail, CtrlSend, Deliver, Drop };

enum class DropReason : std::uint8_t {
    NoRoute,
    QueueOverflow,
    RetryExhausted,
    TtlExpired,
    BufferOverflow,
    EndOfRun,
};
std::string to_string(DropReason r);

struct EventRecord {
    double time = 0.0;
    EvType type = EvType::TxStart;
    FrameKind frame = FrameKind::Data;
    NodeId a = 0; ///< acting node (transmitter / receiver / dropper)
    NodeId b = 0; ///< peer (dst / src / control origin)
    std::uint64_t uid = 0;
    CtrlKind ctrl_kind = CtrlKind::Hello; ///< CtrlSend only
    std::uint32_t ctrl_seq = 0;           ///< CtrlSend only
    DropReason drop = DropReason::NoRoute;///< Drop only
};

/// Test hooks: raw frame put on air at a given time bypassing CSMA, and
/// scheduled edge removal for graph scenarios.
struct TestInjection {
    double time = 0.0;
    NodeId src = 0;
    NodeId dst = kBroadcast;
    FrameKind kind = FrameKind::Data;
    std::uint32_t payload_bytes = 512;
};
struct LinkDownEvent {
    double time = 0.0;
    NodeId a = 0;
    NodeId b = 0;
};

struct RunConfig {
    Protocol protocol = Protocol::Dsdv;
    MacStandard mac = MacStandard::Dot11;
    double duration_s = 900.0;
    std::uint64_t seed = 1;
    double mobility_step_s = 0.1;
    Scenario scenario = HighwayScenario{};
    TrafficSpec traffic;
    RadioParams radio;
    MacProfile mac_profile;
    ProtocolTimers timers; ///< base timers; MOD preset applied per protocol
    FadingSpec fading;
    int data_ttl = 32;
    std::size_t queue_depth = 50;
    double broadcast_jitter_s = 0.010; ///< control-flood desynchronization
    bool record_events = false;
    std::vector<TestInjection> injections;
    std::vector<LinkDownEvent> link_downs;
    /// Replaces the protocol agents when set (test scaffolding).
    std::function<std::unique_ptr<RoutingAgent>(NodeId, RouterEnv&)> agent_factory;

    void validate() const;
};

/// Consistent defaults for one protocol/MAC pair (radio + profile + timers).
RunConfig make_default_config(Protocol p, MacStandard mac);

struct FlowStats {
    std::uint64_t sent = 0;
    std::uint64_t delivered = 0;
    double delay_sum = 0.0;
};

struct RunMetrics {
    std::uint64_t data_sent = 0;
    std::uint64_t data_delivered = 0;
    std::uint64_t bytes_delivered = 0;
    std::uint64_t routing_pkts_tx = 0;
    double delay_sum = 0.0;
    std::uint64_t delay_count = 0;
    std::map<int, FlowStats> flows;
    std::map<DropReason, std::uint64_t> drops;
    std::uint64_t event_digest = 0;
    std::vector<std::string> warnings;
    /// Per-node route snapshots taken at the end of the run.
    std::vector<std::vector<RouteEntry>> final_routes;
    /// (delay, hop count) per delivered packet, kept when record_events.
    std::vector<std::pair<double, int>> delivered_samples;
    std::shared_ptr<std::vector<EventRecord>> events; ///< when record_events
};

struct MetricsReport {
    double throughput_bps = 0.0;
    double throughput_Bps = 0.0;
    std::optional<double> e2ed_s;
    std::optional<double> nrl;
    std::optional<double> delivery_ratio;
};

/// throughput = delivered payload per unit time (bits/s headline, bytes/s
/// alongside); e2ed = mean delay of delivered packets (absent when none);
/// nrl = routing transmissions per delivered packet (absent when none).
MetricsReport compute_metrics(const RunMetrics& m, double duration_s);

/// Executes one deterministic discrete-event run.
RunMetrics run(const RunConfig& config);

} // namespace vanetsim
