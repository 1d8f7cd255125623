#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "airstack/core/bytes.hpp"

namespace airstack::netsim {

struct MuniMetrics {
    std::uint64_t grants = 0;
    std::uint64_t denials = 0;
    std::uint64_t handoffs_total = 0;
    std::uint64_t handoffs_without_reauth = 0;
    std::uint64_t rogue_routed_deliveries = 0;

    bool operator==(const MuniMetrics&) const = default;
};

struct MetricsReport {
    std::uint64_t grants = 0;
    std::uint64_t denials = 0;
    std::uint64_t handoffs_total = 0;
    /// Handoffs where the new serving RSU already held the grant on its chain
    /// replica, so the host went straight back to the routed VLAN.
    std::uint64_t handoffs_without_reauth = 0;
    /// Gossip rounds until full replication -> number of authored blocks.
    /// Only blocks that reached every node by the end of the run are counted.
    std::map<std::uint32_t, std::uint64_t> propagation_rounds_histogram;
    std::uint32_t max_propagation_rounds = 0;
    std::uint64_t rogue_routed_deliveries = 0;
    double localization_rmse_m = 0.0;
    std::map<std::string, MuniMetrics> per_municipality;

    bool operator==(const MetricsReport&) const = default;
};

struct HandoffRecord {
    std::uint64_t timestamp_ms = 0;
    core::MacAddress mac;
    std::string from_rsu;
    std::string to_rsu;
    bool grant_already_replicated = false;

    bool operator==(const HandoffRecord&) const = default;
};

struct GrantRecord {
    std::uint64_t timestamp_ms = 0;
    core::MacAddress mac;
    std::string rsu;

    bool operator==(const GrantRecord&) const = default;
};

struct DeliveryRecord {
    std::uint64_t timestamp_ms = 0;
    core::MacAddress mac;
    std::string rsu;
    bool delivered = false;
    bool rogue = false;

    bool operator==(const DeliveryRecord&) const = default;
};

struct BlockPropagationRecord {
    core::Digest digest;
    std::uint32_t birth_round = 0;
    /// Rounds from authorship to the last node first holding the block.
    std::uint32_t rounds_to_full = 0;
    bool complete = false;
    std::map<std::string, std::uint32_t> first_held_round;

    bool operator==(const BlockPropagationRecord&) const = default;
};

struct SimResult {
    MetricsReport report;
    std::vector<GrantRecord> grant_log;
    std::vector<HandoffRecord> handoff_log;
    std::vector<DeliveryRecord> delivery_log;
    std::vector<BlockPropagationRecord> propagation;
    std::uint64_t events_processed = 0;
};

}  // namespace airstack::netsim
