#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "airstack/ledger/ledger.hpp"
#include "airstack/netsim/metrics.hpp"

namespace airstack::netsim {

struct AuthoredPayload {
    std::string chain_id;
    ledger::PayloadKind kind = ledger::PayloadKind::AccountingEvent;
    std::vector<std::uint8_t> payload;

    bool operator==(const AuthoredPayload&) const = default;
};

/// One gossip participant: a ledger replica plus the bookkeeping needed to
/// re-submit its own payloads should a fork drop them.
struct ReplicaNode {
    std::string node_id;
    core::HostTag author_tag;
    ledger::Ledger ledger;
    std::vector<AuthoredPayload> authored;
    /// Digests currently on this node's chains; fed to the propagation tracker.
    std::set<core::Digest> held;
};

void recompute_held(ReplicaNode& node);

/// Registers a freshly appended block with the node's re-submission log and
/// held set.
void note_authored(ReplicaNode& node, const ledger::Block& block);

/// Watches block replication across a fixed node set, one entry per digest
/// first seen after tracking began (pre-seeded genesis state is not counted).
class PropagationTracker {
public:
    explicit PropagationTracker(std::vector<std::string> node_ids);

    /// Called when `node` authors a new block during the current round.
    void on_authored(const core::Digest& digest, const std::string& node);

    /// Called after each synchronous round with every node's held set; first
    /// sightings are stamped with the completed round number.
    void end_round(const std::vector<const ReplicaNode*>& nodes);

    std::uint32_t rounds_completed() const { return round_; }
    std::vector<BlockPropagationRecord> records() const;
    std::uint32_t max_rounds_to_full() const;
    std::map<std::uint32_t, std::uint64_t> histogram() const;

private:
    struct Entry {
        std::uint32_t birth_round = 0;
        std::map<std::string, std::uint32_t> first_held;
    };
    std::vector<std::string> node_ids_;
    std::map<core::Digest, Entry> entries_;
    std::uint32_t round_ = 0;
};

/// One synchronous gossip round. Every node snapshots its neighbors' chains as
/// they stood at round start, pulls what sync_peer plans, adopts via
/// longest-chain fork choice (rejecting candidates whose authors are not
/// registered in genesis), replays RouteRecord blocks into its route table,
/// and finally re-appends any of its own payloads the adopted branch lost.
/// Information therefore moves exactly one hop per round.
void run_gossip_round(std::vector<ReplicaNode*>& nodes,
                      const std::vector<std::vector<std::size_t>>& adjacency,
                      std::uint64_t now_ms, PropagationTracker* tracker = nullptr);

/// Convenience: a chain whose genesis lists the permitted authors, followed by
/// one ContractRules block when `rules` is nonempty.
ledger::Chain make_authorization_chain(const std::string& chain_id,
                                       const std::vector<core::HostTag>& authors,
                                       const ledger::RuleSet& rules,
                                       std::uint64_t timestamp_ms = 0);

}  // namespace airstack::netsim
