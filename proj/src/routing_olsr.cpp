#include <algorithm>

#include "agents.hpp"

namespace vanetsim::detail {

namespace {

constexpr std::uint64_t kTagHello = 1;
constexpr std::uint64_t kTagTc = 2;
constexpr std::uint64_t kTagExpire = 3;
constexpr double kExpireSweep = 1.0;

/// Link-state routing with multipoint relays. HELLOs establish symmetric
/// links and the two-hop neighborhood, TCs advertise MPR-selector sets and
/// are flooded only by selected MPRs. Routes are hop-count shortest paths
/// over local links plus the TC topology.
class OlsrAgent final : public RoutingAgent {
public:
    OlsrAgent(const ProtocolTimers& timers, RouterEnv& env) : timers_(timers), env_(env) {}

    void start() override {
        env_.schedule(uniform_range(env_.rng(), 0.0, timers_.olsr_hello_s), kTagHello);
        env_.schedule(uniform_range(env_.rng(), 0.0, timers_.olsr_tc_s), kTagTc);
        env_.schedule(kExpireSweep, kTagExpire);
    }

    void on_timer(std::uint64_t tag) override {
        double now = env_.now();
        if (tag == kTagHello) {
            purge(now);
            recompute_mprs();
            send_hello();
            env_.schedule(timers_.olsr_hello_s * uniform_range(env_.rng(), 0.99, 1.01), kTagHello);
        } else if (tag == kTagTc) {
            purge(now);
            if (!selectors_.empty()) send_tc();
            env_.schedule(timers_.olsr_tc_s * uniform_range(env_.rng(), 0.99, 1.01), kTagTc);
        } else if (tag == kTagExpire) {
            purge(now);
            env_.schedule(kExpireSweep, kTagExpire);
        }
    }

    void on_control(const ControlMessage& msg, NodeId from) override {
        if (msg.origin == env_.self()) return;
        if (const auto* hello = std::get_if<HelloBody>(&msg.body)) {
            handle_hello(*hello, from);
        } else if (const auto* tc = std::get_if<TcBody>(&msg.body)) {
            handle_tc(msg, *tc, from);
        }
    }

    void on_link_failure(NodeId neighbor) override {
        links_.erase(neighbor);
        two_hop_.erase(neighbor);
        selectors_.erase(neighbor);
        dirty_ = true;
    }

    DataVerdict on_data(NodeId dest, std::uint64_t) override {
        ensure_routes();
        auto it = rt_.find(dest);
        if (it == rt_.end()) return NoRouteData{};
        return ForwardData{it->second.next_hop};
    }

    std::vector<RouteEntry> routes() const override {
        ensure_routes();
        std::vector<RouteEntry> out;
        for (const auto& [dest, r] : rt_) {
            out.push_back({dest, r.next_hop, r.metric, 0, rt_computed_at_,
                           rt_computed_at_ + 3.0 * timers_.olsr_tc_s});
        }
        return out;
    }

private:
    struct Link {
        double asym_until = -1.0;
        double sym_until = -1.0;
    };
    struct TwoHop {
        std::vector<NodeId> sym; // neighbor's symmetric neighbors
        double until = 0.0;
    };
    struct Route {
        NodeId next_hop;
        std::uint16_t metric;
    };

    bool link_sym(NodeId n, double now) const {
        auto it = links_.find(n);
        return it != links_.end() && it->second.sym_until > now;
    }

    std::vector<NodeId> sym_neighbors(double now) const {
        std::vector<NodeId> out;
        for (const auto& [n, l] : links_) {
            if (l.sym_until > now) out.push_back(n);
        }
        return out;
    }

    void handle_hello(const HelloBody& hello, NodeId from) {
        double now = env_.now();
        double hold = 3.0 * timers_.olsr_hello_s;
        Link& l = links_[from];
        l.asym_until = now + hold;
        auto lists_self = [&](const std::vector<NodeId>& v) {
            return std::find(v.begin(), v.end(), env_.self()) != v.end();
        };
        if (lists_self(hello.sym_neighbors) || lists_self(hello.heard_neighbors)) {
            l.sym_until = now + hold;
        }
        two_hop_[from] = TwoHop{hello.sym_neighbors, now + hold};
        if (l.sym_until > now && lists_self(hello.mprs)) {
            selectors_[from] = now + hold;
        }
        dirty_ = true;
    }

    void handle_tc(const ControlMessage& msg, const TcBody& tc, NodeId from) {
        double now = env_.now();
        if (!link_sym(from, now)) return;
        auto& highest = tc_seen_[msg.origin];
        if (msg.seq <= highest && highest != 0) return; // duplicate or reordered
        highest = msg.seq;

        auto& ansn = topo_ansn_[msg.origin];
        if (tc.ansn >= ansn || ansn == 0) {
            ansn = tc.ansn;
            // drop this origin's previous advertisement, install the new one
            for (auto it = topo_.begin(); it != topo_.end();) {
                if (it->first.first == msg.origin) {
                    it = topo_.erase(it);
                } else {
                    ++it;
                }
            }
            for (NodeId s : tc.selectors) {
                if (s == env_.self()) continue;
                topo_[{msg.origin, s}] = now + 3.0 * timers_.olsr_tc_s;
            }
            dirty_ = true;
        }
        // default forwarding: only MPRs of the sender relay, once
        if (msg.hop_limit > 1 && selectors_.count(from) && selectors_[from] > now) {
            ControlMessage fwd = msg;
            fwd.hop_limit = static_cast<std::uint8_t>(msg.hop_limit - 1);
            env_.send_control(fwd, kBroadcast);
        }
    }

    void recompute_mprs() {
        double now = env_.now();
        std::map<NodeId, std::vector<NodeId>> adj;
        for (const auto& [n, th] : two_hop_) {
            if (link_sym(n, now) && th.until > now) adj[n] = th.sym;
        }
        auto mprs = olsr_select_mprs(env_.self(), sym_neighbors(now), adj);
        mprs_ = {mprs.begin(), mprs.end()};
    }

    void send_hello() {
        double now = env_.now();
        HelloBody body;
        for (const auto& [n, l] : links_) {
            if (l.sym_until > now) {
                body.sym_neighbors.push_back(n);
            } else if (l.asym_until > now) {
                body.heard_neighbors.push_back(n);
            }
        }
        body.mprs = {mprs_.begin(), mprs_.end()};
        ControlMessage msg;
        msg.kind = CtrlKind::Hello;
        msg.origin = env_.self();
        msg.seq = ++hello_seq_;
        msg.hop_limit = 1;
        msg.body = std::move(body);
        env_.send_control(msg, kBroadcast);
    }

    void send_tc() {
        TcBody body;
        for (const auto& [n, until] : selectors_) {
            (void)until;
            body.selectors.push_back(n);
        }
        body.ansn = ++ansn_;
        ControlMessage msg;
        msg.kind = CtrlKind::Tc;
        msg.origin = env_.self();
        msg.seq = ++tc_seq_;
        msg.hop_limit = 32;
        msg.body = std::move(body);
        env_.send_control(msg, kBroadcast);
    }

    void purge(double now) {
        auto sweep = [&](auto& m, auto expired) {
            for (auto it = m.begin(); it != m.end();) {
                if (expired(it->second)) {
                    it = m.erase(it);
                    dirty_ = true;
                } else {
                    ++it;
                }
            }
        };
        sweep(links_, [&](const Link& l) { return l.asym_until <= now && l.sym_until <= now; });
        sweep(two_hop_, [&](const TwoHop& t) { return t.until <= now; });
        sweep(selectors_, [&](double until) { return until <= now; });
        sweep(topo_, [&](double until) { return until <= now; });
    }

    /// Shortest hop-count paths: level 1 from symmetric links, level 2 from
    /// the neighbors' HELLO listings, further levels from TC tuples.
    void ensure_routes() const {
        if (!dirty_) return;
        dirty_ = false;
        double now = env_.now();
        rt_.clear();
        rt_computed_at_ = now;

        std::uint16_t max_metric = 0;
        for (NodeId n : sym_neighbors(now)) {
            rt_[n] = Route{n, 1};
            max_metric = 1;
        }
        for (const auto& [n, th] : two_hop_) {
            if (!link_sym(n, now) || th.until <= now) continue;
            for (NodeId far : th.sym) {
                if (far == env_.self() || rt_.count(far)) continue;
                rt_[far] = Route{n, 2};
                max_metric = 2;
            }
        }
        for (std::uint16_t h = 1; h <= max_metric && h < 64; ++h) {
            for (const auto& [edge, until] : topo_) {
                if (until <= now) continue;
                auto [last, dest] = edge;
                if (dest == env_.self() || rt_.count(dest)) continue;
                auto it = rt_.find(last);
                if (it != rt_.end() && it->second.metric == h) {
                    rt_[dest] = Route{it->second.next_hop,
                                      static_cast<std::uint16_t>(h + 1)};
                    max_metric = std::max<std::uint16_t>(max_metric,
                                                         static_cast<std::uint16_t>(h + 1));
                }
            }
        }
    }

    ProtocolTimers timers_;
    RouterEnv& env_;
    std::map<NodeId, Link> links_;
    std::map<NodeId, TwoHop> two_hop_;
    std::set<NodeId> mprs_;
    std::map<NodeId, double> selectors_;
    std::map<std::pair<NodeId, NodeId>, double> topo_; // (last hop, dest) -> expiry
    std::map<NodeId, std::uint16_t> topo_ansn_;
    std::map<NodeId, std::uint32_t> tc_seen_;
    mutable std::map<NodeId, Route> rt_;
    mutable double rt_computed_at_ = 0.0;
    mutable bool dirty_ = true;
    std::uint32_t hello_seq_ = 0;
    std::uint32_t tc_seq_ = 0;
    std::uint16_t ansn_ = 0;
};

} // namespace

std::unique_ptr<RoutingAgent> make_olsr_agent(const ProtocolTimers& timers, RouterEnv& env) {
    return std::make_unique<OlsrAgent>(timers, env);
}

} // namespace vanetsim::detail
