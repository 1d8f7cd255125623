#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "airstack/core/rng.hpp"
#include "airstack/identity/dh.hpp"
#include "airstack/identity/pipeline.hpp"
#include "airstack/netsim/gossip.hpp"
#include "airstack/netsim/metrics.hpp"
#include "airstack/netsim/scenario.hpp"
#include "airstack/spectrum/access_port.hpp"

namespace airstack::netsim {

enum class EventKind { MoveTick, SenseTick, GossipTick, ExpiryTick };

const char* event_kind_name(EventKind kind);

/// Queue order is (time, admission sequence number); the sequence number is
/// global and unique, so processing order is a total order independent of heap
/// internals.
struct Event {
    std::uint64_t time_ms = 0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::MoveTick;

    auto operator<=>(const Event&) const = default;
};

struct StepResult {
    Event event;
    std::vector<Event> emitted;
};

/// One infrastructure radio with its ledger replica, access port, and the
/// behavior profiles of the hosts it currently serves.
struct RsuNode {
    spectrum::AirInterface iface;
    std::string network_id;
    identity::KeyPair keys;
    ReplicaNode replica;
    std::map<core::HostTag, identity::BehaviorProfile> profiles;
    spectrum::AccessPort port;
    /// Last acted-on verdict per host; a new block is only appended when the
    /// verdict changes.
    std::map<core::HostTag, ledger::Verdict> last_verdict;
};

struct DeviceNode {
    bool rogue = false;
    core::MacAddress mac;
    identity::KeyPair keys;
    core::HostTag tag;
    spectrum::AirInterface iface;
    std::vector<core::Vec2> polyline;
    double speed_mps = 0.0;
    bool loop = false;
    /// Arc length travelled since start; ping-pong folding maps it onto the
    /// polyline when loop is set.
    double path_pos_m = 0.0;
    std::optional<std::size_t> serving;
};

using TraceFn = std::function<void(std::uint64_t now_ms, const std::string& kind,
                                   const std::string& detail)>;

/// Deterministic discrete-event simulation. All randomness flows from the
/// scenario seed: first key-generation seeds (RSUs in municipality order, then
/// vehicles, then rogue devices), then the measurement noise stream. Sensing
/// at time t sees positions as advanced by the latest MoveTick processed
/// before it.
class World {
public:
    explicit World(Scenario scenario);

    bool done() const;
    /// Processes the earliest pending event. Throws core::Error("NoPendingEvents")
    /// when done.
    StepResult step();
    void run_to_end();
    SimResult result() const;

    std::uint64_t now_ms() const { return clock_ms_; }
    const Scenario& scenario() const { return scenario_; }
    const std::vector<RsuNode>& rsus() const { return rsus_; }
    const std::vector<DeviceNode>& devices() const { return devices_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }
    const PropagationTracker& tracker() const { return tracker_; }
    void set_trace(TraceFn fn) { trace_ = std::move(fn); }

private:
    void schedule(std::uint64_t time_ms, EventKind kind, std::vector<Event>* emitted);
    void handle_move(std::uint64_t now);
    void handle_sense(std::uint64_t now);
    void handle_gossip(std::uint64_t now);
    void handle_expiry(std::uint64_t now);
    void register_new_blocks(RsuNode& rsu, std::uint64_t height_before);
    void trace(std::uint64_t now, const std::string& kind, const std::string& detail);
    ledger::Chain& auth_chain(RsuNode& rsu);
    const ledger::Chain& auth_chain(const RsuNode& rsu) const;

    Scenario scenario_;
    std::vector<RsuNode> rsus_;
    std::vector<DeviceNode> devices_;
    std::vector<std::vector<std::size_t>> adjacency_;
    core::SplitMix64 noise_rng_{0};
    PropagationTracker tracker_{{}};

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
    std::uint64_t next_seq_ = 0;
    std::uint64_t clock_ms_ = 0;
    std::uint64_t last_move_ms_ = 0;
    std::uint64_t events_processed_ = 0;

    MetricsReport report_;
    std::vector<GrantRecord> grant_log_;
    std::vector<HandoffRecord> handoff_log_;
    std::vector<DeliveryRecord> delivery_log_;
    double localization_sq_err_sum_ = 0.0;
    std::uint64_t localization_samples_ = 0;
    TraceFn trace_;
};

World build_world(Scenario scenario);
SimResult run_scenario(const Scenario& scenario);

}  // namespace airstack::netsim
