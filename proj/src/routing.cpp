#include "vanetsim/routing.hpp"

#include <algorithm>

#include "agents.hpp"
#include "vanetsim/errors.hpp"

namespace vanetsim {

std::unique_ptr<RoutingAgent> make_agent(Protocol p, const ProtocolTimers& timers, RouterEnv& env) {
    switch (base_protocol(p)) {
        case Protocol::Dsdv: return detail::make_dsdv_agent(timers, env);
        case Protocol::Olsr: return detail::make_olsr_agent(timers, env);
        case Protocol::Dymo: return detail::make_dymo_agent(timers, env);
        default: break;
    }
    throw ConfigError("make_agent: unsupported protocol");
}

Protocol protocol_from_string(const std::string& name) {
    if (name == "dsdv") return Protocol::Dsdv;
    if (name == "olsr") return Protocol::Olsr;
    if (name == "dymo") return Protocol::Dymo;
    if (name == "mod-dsdv") return Protocol::ModDsdv;
    if (name == "mod-olsr") return Protocol::ModOlsr;
    if (name == "mod-dymo") return Protocol::ModDymo;
    throw ConfigError("unknown protocol '" + name +
                      "'; expected one of {dsdv, olsr, dymo, mod-dsdv, mod-olsr, mod-dymo}");
}

std::string to_string(Protocol p) {
    switch (p) {
        case Protocol::Dsdv: return "dsdv";
        case Protocol::Olsr: return "olsr";
        case Protocol::Dymo: return "dymo";
        case Protocol::ModDsdv: return "mod-dsdv";
        case Protocol::ModOlsr: return "mod-olsr";
        case Protocol::ModDymo: return "mod-dymo";
    }
    return "?";
}

bool is_mod_preset(Protocol p) {
    return p == Protocol::ModDsdv || p == Protocol::ModOlsr || p == Protocol::ModDymo;
}

Protocol base_protocol(Protocol p) {
    switch (p) {
        case Protocol::ModDsdv: return Protocol::Dsdv;
        case Protocol::ModOlsr: return Protocol::Olsr;
        case Protocol::ModDymo: return Protocol::Dymo;
        default: return p;
    }
}

void ProtocolTimers::validate() const {
    auto pos = [](double v, const char* what) {
        if (!(v > 0.0)) throw ConfigError(std::string("timers: ") + what + " must be > 0");
    };
    pos(dsdv_periodic_s, "dsdv_periodic_s");
    pos(dsdv_trigger_min_gap_s, "dsdv_trigger_min_gap_s");
    pos(dsdv_settling_s, "dsdv_settling_s");
    pos(olsr_hello_s, "olsr_hello_s");
    pos(olsr_tc_s, "olsr_tc_s");
    pos(dymo_route_timeout_s, "dymo_route_timeout_s");
    pos(dymo_rreq_wait_s, "dymo_rreq_wait_s");
    if (dymo_rreq_tries < 1) throw ConfigError("timers: dymo_rreq_tries must be >= 1");
}

ProtocolTimers apply_mod_preset(const ProtocolTimers& base, Protocol preset) {
    ProtocolTimers t = base;
    switch (preset) {
        case Protocol::ModDsdv:
            t.dsdv_periodic_s *= 2.0;
            t.dsdv_trigger_min_gap_s *= 2.0;
            t.dsdv_settling_s *= 2.0;
            break;
        case Protocol::ModOlsr:
            t.olsr_hello_s /= 2.0;
            t.olsr_tc_s /= 2.0;
            break;
        case Protocol::ModDymo:
            t.dymo_route_timeout_s /= 2.0;
            t.dymo_rreq_wait_s /= 2.0;
            break;
        default:
            throw ConfigError("apply_mod_preset: not a MOD preset: " + to_string(preset));
    }
    return t;
}

ProtocolTimers timers_for(Protocol p, const ProtocolTimers& base) {
    return is_mod_preset(p) ? apply_mod_preset(base, p) : base;
}

std::string to_string(CtrlKind k) {
    switch (k) {
        case CtrlKind::DsdvUpdate: return "dsdv-update";
        case CtrlKind::Hello: return "hello";
        case CtrlKind::Tc: return "tc";
        case CtrlKind::Rreq: return "rreq";
        case CtrlKind::Rrep: return "rrep";
        case CtrlKind::Rerr: return "rerr";
    }
    return "?";
}

std::uint32_t ControlMessage::wire_bytes() const {
    struct Sizer {
        std::uint32_t operator()(const DsdvUpdateBody& b) const {
            return 8 + 12 * static_cast<std::uint32_t>(b.routes.size());
        }
        std::uint32_t operator()(const HelloBody& b) const {
            return 8 + 5 * static_cast<std::uint32_t>(b.sym_neighbors.size() +
                                                      b.heard_neighbors.size() + b.mprs.size());
        }
        std::uint32_t operator()(const TcBody& b) const {
            return 8 + 4 * static_cast<std::uint32_t>(b.selectors.size());
        }
        std::uint32_t operator()(const RreqBody&) const { return 24; }
        std::uint32_t operator()(const RrepBody&) const { return 20; }
        std::uint32_t operator()(const RerrBody& b) const {
            return 8 + 8 * static_cast<std::uint32_t>(b.unreachable.size());
        }
    };
    return std::visit(Sizer{}, body);
}

std::vector<NodeId> olsr_select_mprs(NodeId self, const std::vector<NodeId>& one_hop,
                                     const std::map<NodeId, std::vector<NodeId>>& two_hop_adj) {
    std::set<NodeId> n1(one_hop.begin(), one_hop.end());
    n1.erase(self);

    // strict two-hop set and per-neighbor coverage
    std::map<NodeId, std::set<NodeId>> covers; // neighbor -> two-hop nodes it reaches
    std::set<NodeId> n2;
    for (NodeId n : n1) {
        auto it = two_hop_adj.find(n);
        if (it == two_hop_adj.end()) continue;
        for (NodeId far : it->second) {
            if (far == self || n1.count(far)) continue;
            covers[n].insert(far);
            n2.insert(far);
        }
    }

    std::set<NodeId> chosen;
    std::set<NodeId> covered;

    // neighbors that are the only cover of some two-hop node
    for (NodeId far : n2) {
        NodeId only = kBroadcast;
        int cnt = 0;
        for (const auto& [n, reach] : covers) {
            if (reach.count(far)) {
                ++cnt;
                only = n;
            }
        }
        if (cnt == 1) chosen.insert(only);
    }
    for (NodeId n : chosen) {
        for (NodeId far : covers[n]) covered.insert(far);
    }

    // greedy: most uncovered coverage, ties to lower id (map order)
    while (covered.size() < n2.size()) {
        NodeId best = kBroadcast;
        std::size_t best_gain = 0;
        for (const auto& [n, reach] : covers) {
            if (chosen.count(n)) continue;
            std::size_t gain = 0;
            for (NodeId far : reach) {
                if (!covered.count(far)) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = n;
            }
        }
        if (best == kBroadcast) break; // uncoverable remainder
        chosen.insert(best);
        for (NodeId far : covers[best]) covered.insert(far);
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace vanetsim
