#include <cmath>
#include <limits>

#include "agents.hpp"

namespace vanetsim::detail {

namespace {

constexpr std::uint64_t kTagPeriodic = 1;
constexpr std::uint64_t kTagTrigger = 2;
constexpr double kNever = std::numeric_limits<double>::infinity();

/// Destination-sequenced distance vector. Even sequence numbers advertise a
/// live route owned by the destination; a broken link is re-advertised with
/// the next odd sequence and infinite metric.
class DsdvAgent final : public RoutingAgent {
public:
    DsdvAgent(const ProtocolTimers& timers, RouterEnv& env) : timers_(timers), env_(env) {}

    void start() override {
        Entry self;
        self.next_hop = env_.self();
        self.metric = 0;
        self.seq = 0;
        self.installed_at = env_.now();
        self.expires_at = kNever;
        table_[env_.self()] = self;
        // desynchronize dump phases across nodes
        env_.schedule(uniform_range(env_.rng(), 0.0, timers_.dsdv_periodic_s), kTagPeriodic);
    }

    void on_timer(std::uint64_t tag) override {
        if (tag == kTagPeriodic) {
            expire_routes();
            own_seq_ += 2;
            table_[env_.self()].seq = own_seq_;
            broadcast_routes(collect_ads(/*full=*/true), true);
            pending_.clear();
            env_.schedule(timers_.dsdv_periodic_s * uniform_range(env_.rng(), 0.99, 1.01),
                          kTagPeriodic);
        } else if (tag == kTagTrigger) {
            trigger_scheduled_ = false;
            fire_trigger();
        }
    }

    void on_control(const ControlMessage& msg, NodeId from) override {
        const auto* body = std::get_if<DsdvUpdateBody>(&msg.body);
        if (body == nullptr) return;
        double now = env_.now();
        for (const DsdvRouteAd& ad : body->routes) {
            if (ad.dest == env_.self()) {
                // someone advertises a stale/broken route to us: outbid it
                if (ad.seq > own_seq_) {
                    own_seq_ = (ad.seq % 2 == 0) ? ad.seq + 2 : ad.seq + 1;
                    table_[env_.self()].seq = own_seq_;
                    mark_pending(env_.self(), now);
                }
                continue;
            }
            std::uint16_t metric =
                ad.metric >= kInfMetric ? kInfMetric
                                        : static_cast<std::uint16_t>(ad.metric + 1);
            auto it = table_.find(ad.dest);
            bool adopt = false;
            if (it == table_.end()) {
                adopt = metric < kInfMetric; // don't learn fresh broken routes
            } else if (ad.seq > it->second.seq) {
                adopt = true;
            } else if (ad.seq == it->second.seq && metric < it->second.metric) {
                adopt = true;
            } else if (ad.seq == it->second.seq && it->second.next_hop == from &&
                       metric == it->second.metric) {
                it->second.expires_at = now + 3.0 * timers_.dsdv_periodic_s; // refresh
            }
            if (!adopt) continue;
            bool is_new = it == table_.end();
            bool changed = is_new || it->second.metric != metric;
            Entry e;
            e.next_hop = from;
            e.metric = metric;
            e.seq = ad.seq;
            e.installed_at = now;
            e.expires_at = metric >= kInfMetric ? now + timers_.dsdv_periodic_s
                                                : now + 3.0 * timers_.dsdv_periodic_s;
            table_[ad.dest] = e;
            if (changed) {
                // brand-new and broken routes go out promptly, metric changes
                // on existing routes wait out the settling delay
                double ready = (is_new || metric >= kInfMetric)
                                   ? now
                                   : now + timers_.dsdv_settling_s;
                mark_pending(ad.dest, ready);
            }
        }
    }

    void on_link_failure(NodeId neighbor) override {
        double now = env_.now();
        bool any = false;
        for (auto& [dest, e] : table_) {
            if (dest == env_.self() || e.next_hop != neighbor || e.metric >= kInfMetric) continue;
            e.metric = kInfMetric;
            e.seq += 1; // odd: route invalid until the destination renews it
            e.expires_at = now + timers_.dsdv_periodic_s;
            mark_pending(dest, now);
            any = true;
        }
        if (any) schedule_trigger(now);
    }

    DataVerdict on_data(NodeId dest, std::uint64_t) override {
        auto it = table_.find(dest);
        if (it == table_.end() || it->second.metric >= kInfMetric ||
            it->second.expires_at <= env_.now()) {
            return NoRouteData{};
        }
        return ForwardData{it->second.next_hop};
    }

    std::vector<RouteEntry> routes() const override {
        std::vector<RouteEntry> out;
        for (const auto& [dest, e] : table_) {
            if (dest == env_.self() || e.metric >= kInfMetric) continue;
            out.push_back({dest, e.next_hop, e.metric, e.seq, e.installed_at, e.expires_at});
        }
        return out;
    }

private:
    struct Entry {
        NodeId next_hop = 0;
        std::uint16_t metric = 0;
        std::uint32_t seq = 0;
        double installed_at = 0.0;
        double expires_at = 0.0;
    };

    std::vector<DsdvRouteAd> collect_ads(bool full, const std::set<NodeId>* only = nullptr) {
        std::vector<DsdvRouteAd> ads;
        for (const auto& [dest, e] : table_) {
            if (!full && (only == nullptr || !only->count(dest))) continue;
            ads.push_back({dest, e.seq, e.metric});
        }
        return ads;
    }

    void broadcast_routes(std::vector<DsdvRouteAd> ads, bool full) {
        if (ads.empty()) return;
        ControlMessage msg;
        msg.kind = CtrlKind::DsdvUpdate;
        msg.origin = env_.self();
        msg.seq = ++ctrl_seq_;
        msg.hop_limit = 1;
        msg.body = DsdvUpdateBody{std::move(ads), full};
        env_.send_control(msg, kBroadcast);
    }

    void mark_pending(NodeId dest, double ready_at) {
        auto [it, inserted] = pending_.try_emplace(dest, ready_at);
        if (!inserted) it->second = std::min(it->second, ready_at);
        schedule_trigger(ready_at);
    }

    void schedule_trigger(double ready_at) {
        double at = std::max(ready_at, last_trigger_ + timers_.dsdv_trigger_min_gap_s);
        if (trigger_scheduled_ && at >= next_trigger_check_) return;
        trigger_scheduled_ = true;
        next_trigger_check_ = at;
        env_.schedule(std::max(0.0, at - env_.now()), kTagTrigger);
    }

    void fire_trigger() {
        double now = env_.now();
        if (now < last_trigger_ + timers_.dsdv_trigger_min_gap_s) {
            schedule_trigger(last_trigger_ + timers_.dsdv_trigger_min_gap_s);
            return;
        }
        std::set<NodeId> ready;
        double earliest_future = kNever;
        for (const auto& [dest, at] : pending_) {
            if (at <= now) {
                ready.insert(dest);
            } else {
                earliest_future = std::min(earliest_future, at);
            }
        }
        if (!ready.empty()) {
            broadcast_routes(collect_ads(false, &ready), false);
            for (NodeId d : ready) pending_.erase(d);
            last_trigger_ = now;
        }
        if (!pending_.empty() && std::isfinite(earliest_future)) {
            schedule_trigger(earliest_future);
        }
    }

    void expire_routes() {
        double now = env_.now();
        for (auto it = table_.begin(); it != table_.end();) {
            auto& [dest, e] = *it;
            if (dest != env_.self() && e.expires_at <= now) {
                if (e.metric < kInfMetric) {
                    e.metric = kInfMetric;
                    e.seq += 1;
                    e.expires_at = now + timers_.dsdv_periodic_s;
                    mark_pending(dest, now);
                    ++it;
                } else {
                    it = table_.erase(it); // stale broken entry
                }
            } else {
                ++it;
            }
        }
    }

    ProtocolTimers timers_;
    RouterEnv& env_;
    std::map<NodeId, Entry> table_;
    std::map<NodeId, double> pending_; // dest -> advertisement ready time
    std::uint32_t own_seq_ = 0;
    std::uint32_t ctrl_seq_ = 0;
    double last_trigger_ = -1e300;
    bool trigger_scheduled_ = false;
    double next_trigger_check_ = 0.0;
};

} // namespace

std::unique_ptr<RoutingAgent> make_dsdv_agent(const ProtocolTimers& timers, RouterEnv& env) {
    return std::make_unique<DsdvAgent>(timers, env);
}

} // namespace vanetsim::detail
