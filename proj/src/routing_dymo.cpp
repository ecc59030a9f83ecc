#include <algorithm>

#include "agents.hpp"

namespace vanetsim::detail {

namespace {

constexpr std::uint64_t kTagRreqRetry = 1ULL << 32;
constexpr std::uint8_t kRreqHopLimit = 10;
constexpr std::size_t kBufferCap = 64;

/// On-demand routing: RREQ floods build reverse routes toward the origin,
/// the target answers with a unicast RREP along them, link-layer failures
/// tear routes down with RERRs. Every use of a route refreshes its timeout.
class DymoAgent final : public RoutingAgent {
public:
    DymoAgent(const ProtocolTimers& timers, RouterEnv& env) : timers_(timers), env_(env) {}

    void start() override {}

    void on_timer(std::uint64_t tag) override {
        if ((tag & kTagRreqRetry) == 0) return;
        NodeId dest = static_cast<NodeId>(tag & 0xffffffffu);
        auto it = pending_.find(dest);
        if (it == pending_.end()) return;
        if (valid_route(dest)) {
            flush_buffer(dest);
            return;
        }
        if (it->second.tries < timers_.dymo_rreq_tries) {
            send_rreq(dest, it->second);
            return;
        }
        for (std::uint64_t pid : it->second.buffer) {
            ++unreachable_drops_;
            env_.drop_buffered(pid, BufferDrop::Unreachable);
        }
        pending_.erase(it);
    }

    void on_control(const ControlMessage& msg, NodeId from) override {
        if (msg.origin == env_.self()) return;
        if (const auto* rreq = std::get_if<RreqBody>(&msg.body)) {
            handle_rreq(msg, *rreq, from);
        } else if (const auto* rrep = std::get_if<RrepBody>(&msg.body)) {
            handle_rrep(msg, *rrep, from);
        } else if (const auto* rerr = std::get_if<RerrBody>(&msg.body)) {
            handle_rerr(*rerr, from);
        }
    }

    void on_link_failure(NodeId neighbor) override {
        double now = env_.now();
        RerrBody body;
        for (auto it = table_.begin(); it != table_.end();) {
            if (it->second.next_hop == neighbor && it->second.expires_at > now) {
                body.unreachable.push_back({it->first, it->second.seq});
                it = table_.erase(it);
            } else {
                ++it;
            }
        }
        if (!body.unreachable.empty()) {
            send_rerr(std::move(body));
        }
    }

    DataVerdict on_data(NodeId dest, std::uint64_t packet_id) override {
        double now = env_.now();
        auto it = table_.find(dest);
        if (it != table_.end() && it->second.expires_at > now) {
            it->second.expires_at = now + timers_.dymo_route_timeout_s; // use refreshes
            return ForwardData{it->second.next_hop};
        }
        auto& disc = pending_[dest];
        disc.buffer.push_back(packet_id);
        if (disc.buffer.size() > kBufferCap) {
            env_.drop_buffered(disc.buffer.front(), BufferDrop::Overflow);
            disc.buffer.pop_front();
        }
        if (disc.tries == 0) {
            send_rreq(dest, disc);
        }
        return BufferedData{};
    }

    std::vector<RouteEntry> routes() const override {
        double now = env_.now();
        std::vector<RouteEntry> out;
        for (const auto& [dest, e] : table_) {
            if (e.expires_at <= now) continue;
            out.push_back({dest, e.next_hop, e.metric, e.seq, e.installed_at, e.expires_at});
        }
        return out;
    }

    std::uint64_t unreachable_drops() const override { return unreachable_drops_; }

private:
    struct Entry {
        NodeId next_hop = 0;
        std::uint16_t metric = 0;
        std::uint32_t seq = 0;
        double installed_at = 0.0;
        double expires_at = 0.0;
    };
    struct Discovery {
        int tries = 0;
        std::deque<std::uint64_t> buffer;
    };

    bool valid_route(NodeId dest) const {
        auto it = table_.find(dest);
        return it != table_.end() && it->second.expires_at > env_.now();
    }

    /// Installs/refreshes a route if the advertised seq is newer, or equal
    /// with a better metric. Returns true when the table changed.
    bool maybe_adopt(NodeId dest, NodeId next_hop, std::uint16_t metric, std::uint32_t seq) {
        double now = env_.now();
        auto it = table_.find(dest);
        bool adopt = it == table_.end() || it->second.expires_at <= now || seq > it->second.seq ||
                     (seq == it->second.seq && metric < it->second.metric);
        if (!adopt) return false;
        table_[dest] = Entry{next_hop, metric, seq, now, now + timers_.dymo_route_timeout_s};
        return true;
    }

    void send_rreq(NodeId dest, Discovery& disc) {
        ++disc.tries;
        ControlMessage msg;
        msg.kind = CtrlKind::Rreq;
        msg.origin = env_.self();
        msg.seq = ++rreq_seq_;
        msg.hop_limit = kRreqHopLimit;
        msg.body = RreqBody{env_.self(), dest, ++own_seq_, 0};
        env_.send_control(msg, kBroadcast);
        env_.schedule(timers_.dymo_rreq_wait_s, kTagRreqRetry | dest);
    }

    void send_rerr(RerrBody body) {
        ControlMessage msg;
        msg.kind = CtrlKind::Rerr;
        msg.origin = env_.self();
        msg.seq = ++rerr_seq_;
        msg.hop_limit = kRreqHopLimit;
        msg.body = std::move(body);
        env_.send_control(msg, kBroadcast);
    }

    void handle_rreq(const ControlMessage& msg, const RreqBody& rreq, NodeId from) {
        std::uint16_t metric = static_cast<std::uint16_t>(rreq.metric + 1);
        // reverse route to the origin; duplicates may still improve it
        if (maybe_adopt(rreq.origin, from, metric, rreq.origin_seq)) {
            if (valid_route(rreq.origin)) flush_buffer(rreq.origin);
        }
        auto key = std::make_pair(rreq.origin, rreq.origin_seq);
        if (rreq_seen_.count(key)) return; // answered or rebroadcast already
        rreq_seen_.insert(key);
        if (rreq_seen_.size() > 4096) rreq_seen_.clear(); // coarse pruning

        if (rreq.target == env_.self()) {
            ++own_seq_;
            ControlMessage rep;
            rep.kind = CtrlKind::Rrep;
            rep.origin = env_.self();
            rep.seq = ++rrep_seq_;
            rep.hop_limit = kRreqHopLimit;
            rep.body = RrepBody{rreq.origin, env_.self(), own_seq_, 0};
            env_.send_control(rep, from);
            return;
        }
        if (msg.hop_limit > 1) {
            ControlMessage fwd = msg;
            fwd.hop_limit = static_cast<std::uint8_t>(msg.hop_limit - 1);
            fwd.body = RreqBody{rreq.origin, rreq.target, rreq.origin_seq, metric};
            env_.send_control(fwd, kBroadcast);
        }
    }

    void handle_rrep(const ControlMessage& msg, const RrepBody& rrep, NodeId from) {
        std::uint16_t metric = static_cast<std::uint16_t>(rrep.metric + 1);
        maybe_adopt(rrep.target, from, metric, rrep.target_seq);
        if (valid_route(rrep.target)) flush_buffer(rrep.target);
        if (rrep.rreq_origin == env_.self()) return;
        auto it = table_.find(rrep.rreq_origin);
        if (it == table_.end() || it->second.expires_at <= env_.now()) return; // reverse route gone
        it->second.expires_at = env_.now() + timers_.dymo_route_timeout_s;
        if (msg.hop_limit <= 1) return;
        ControlMessage fwd = msg;
        fwd.hop_limit = static_cast<std::uint8_t>(msg.hop_limit - 1);
        fwd.body = RrepBody{rrep.rreq_origin, rrep.target, rrep.target_seq, metric};
        env_.send_control(fwd, it->second.next_hop);
    }

    void handle_rerr(const RerrBody& rerr, NodeId from) {
        double now = env_.now();
        RerrBody forward;
        for (const auto& [dest, seq] : rerr.unreachable) {
            auto it = table_.find(dest);
            if (it == table_.end() || it->second.next_hop != from) continue;
            forward.unreachable.push_back({dest, std::max(seq, it->second.seq)});
            table_.erase(it);
        }
        (void)now;
        if (!forward.unreachable.empty()) {
            send_rerr(std::move(forward));
        }
    }

    void flush_buffer(NodeId dest) {
        auto it = pending_.find(dest);
        if (it == pending_.end()) return;
        auto route = table_.find(dest);
        if (route == table_.end()) return;
        for (std::uint64_t pid : it->second.buffer) {
            env_.forward_buffered(pid, route->second.next_hop);
        }
        route->second.expires_at = env_.now() + timers_.dymo_route_timeout_s;
        pending_.erase(it);
    }

    ProtocolTimers timers_;
    RouterEnv& env_;
    std::map<NodeId, Entry> table_;
    std::map<NodeId, Discovery> pending_;
    std::set<std::pair<NodeId, std::uint32_t>> rreq_seen_;
    std::uint32_t own_seq_ = 0;
    std::uint32_t rreq_seq_ = 0;
    std::uint32_t rrep_seq_ = 0;
    std::uint32_t rerr_seq_ = 0;
    std::uint64_t unreachable_drops_ = 0;
};

} // namespace

std::unique_ptr<RoutingAgent> make_dymo_agent(const ProtocolTimers& timers, RouterEnv& env) {
    return std::make_unique<DymoAgent>(timers, env);
}

} // namespace vanetsim::detail
