#include "airstack/netsim/gossip.hpp"

#include <algorithm>

#include "airstack/core/error.hpp"

namespace airstack::netsim {

void recompute_held(ReplicaNode& node) {
    node.held.clear();
    for (const auto& [id, chain] : node.ledger.chains)
        for (const ledger::Block& b : chain.blocks)
            node.held.insert(b.digest);
}

void note_authored(ReplicaNode& node, const ledger::Block& block) {
    node.authored.push_back(
        AuthoredPayload{block.header.chain_id, block.payload_kind, block.payload});
    node.held.insert(block.digest);
}

PropagationTracker::PropagationTracker(std::vector<std::string> node_ids)
    : node_ids_(std::move(node_ids)) {}

void PropagationTracker::on_authored(const core::Digest& digest, const std::string& node) {
    Entry& entry = entries_[digest];
    entry.birth_round = round_;
    entry.first_held.emplace(node, round_);
}

void PropagationTracker::end_round(const std::vector<const ReplicaNode*>& nodes) {
    ++round_;
    for (const ReplicaNode* node : nodes) {
        for (const core::Digest& digest : node->held) {
            auto it = entries_.find(digest);
            if (it != entries_.end())
                it->second.first_held.emplace(node->node_id, round_);
        }
    }
}

std::vector<BlockPropagationRecord> PropagationTracker::records() const {
    std::vector<BlockPropagationRecord> out;
    out.reserve(entries_.size());
    for (const auto& [digest, entry] : entries_) {
        BlockPropagationRecord rec;
        rec.digest = digest;
        rec.birth_round = entry.birth_round;
        rec.first_held_round = entry.first_held;
        rec.complete = entry.first_held.size() == node_ids_.size();
        if (rec.complete) {
            std::uint32_t last = entry.birth_round;
            for (const auto& [node, round] : entry.first_held) last = std::max(last, round);
            rec.rounds_to_full = last - entry.birth_round;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::uint32_t PropagationTracker::max_rounds_to_full() const {
    std::uint32_t best = 0;
    for (const BlockPropagationRecord& rec : records())
        if (rec.complete)
            best = std::max(best, rec.rounds_to_full);
    return best;
}

std::map<std::uint32_t, std::uint64_t> PropagationTracker::histogram() const {
    std::map<std::uint32_t, std::uint64_t> hist;
    for (const BlockPropagationRecord& rec : records())
        if (rec.complete)
            hist[rec.rounds_to_full]++;
    return hist;
}

namespace {

bool candidate_acceptable(const ledger::Chain& candidate) {
    if (!ledger::verify_chain(candidate).valid)
        return false;
    try {
        return ledger::authors_valid(candidate);
    } catch (const core::Error&) {
        return false;
    }
}

void replay_routes(ReplicaNode& node) {
    for (const auto& [id, chain] : node.ledger.chains)
        for (const ledger::Block& b : chain.blocks)
            if (b.payload_kind == ledger::PayloadKind::RouteRecord)
                ledger::record_route(node.ledger, ledger::Route::decode(b.payload));
}

/// Applies one fetched candidate. Suffix fetches that link cleanly onto the
/// local tip are appended directly; everything else goes through full fork
/// resolution. Returns true when the local chain changed.
bool adopt_candidate(ReplicaNode& node, const ledger::Chain& candidate,
                     std::uint64_t from_height) {
    if (!candidate_acceptable(candidate))
        return false;
    auto it = node.ledger.chains.find(candidate.chain_id);
    if (it == node.ledger.chains.end() || it->second.empty()) {
        node.ledger.chains[candidate.chain_id] = candidate;
        return true;
    }
    ledger::Chain& local = it->second;
    if (from_height == local.blocks.size() && candidate.blocks.size() > local.blocks.size() &&
        candidate.blocks[local.blocks.size()].header.prev_digest == local.tip().digest) {
        // The candidate verified as a whole and its block at our tip height
        // links onto our tip, so by hash chaining the prefixes are identical.
        local.blocks.insert(local.blocks.end(), candidate.blocks.begin() + local.blocks.size(),
                            candidate.blocks.end());
        return true;
    }
    try {
        const ledger::Chain& winner = ledger::resolve_fork(local, candidate);
        if (&winner == &candidate) {
            local = candidate;
            return true;
        }
    } catch (const core::Error&) {
        // Unverifiable or genesis-mismatched candidate; keep the local chain.
    }
    return false;
}

void resubmit_lost(ReplicaNode& node, std::uint64_t now_ms, PropagationTracker* tracker) {
    std::map<std::string, std::set<std::pair<std::uint8_t, std::vector<std::uint8_t>>>> present;
    for (const auto& [id, chain] : node.ledger.chains)
        for (const ledger::Block& b : chain.blocks)
            present[id].insert({static_cast<std::uint8_t>(b.payload_kind), b.payload});
    for (const AuthoredPayload& entry : node.authored) {
        auto chain_it = node.ledger.chains.find(entry.chain_id);
        if (chain_it == node.ledger.chains.end() || chain_it->second.empty())
            continue;
        auto key = std::make_pair(static_cast<std::uint8_t>(entry.kind), entry.payload);
        if (present[entry.chain_id].count(key))
            continue;
        const ledger::Block& block = ledger::append_block(chain_it->second, entry.kind,
                                                          entry.payload, now_ms, node.author_tag);
        present[entry.chain_id].insert(key);
        node.held.insert(block.digest);
        if (tracker)
            tracker->on_authored(block.digest, node.node_id);
    }
}

}  // namespace

void run_gossip_round(std::vector<ReplicaNode*>& nodes,
                      const std::vector<std::vector<std::size_t>>& adjacency,
                      std::uint64_t now_ms, PropagationTracker* tracker) {
    std::vector<std::map<std::string, ledger::Chain>> snapshots;
    std::vector<std::map<std::string, ledger::TipInfo>> tips;
    snapshots.reserve(nodes.size());
    tips.reserve(nodes.size());
    for (const ReplicaNode* node : nodes) {
        snapshots.push_back(node->ledger.chains);
        tips.push_back(ledger::chain_tips(node->ledger));
    }

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        ReplicaNode& node = *nodes[i];
        bool changed = false;
        for (std::size_t j : adjacency[i]) {
            for (const ledger::FetchRequest& req : ledger::sync_peer(node.ledger, tips[j])) {
                auto it = snapshots[j].find(req.chain_id);
                if (it == snapshots[j].end())
                    continue;
                changed |= adopt_candidate(node, it->second, req.from_height);
            }
        }
        if (changed) {
            replay_routes(node);
            recompute_held(node);
        }
        resubmit_lost(node, now_ms, tracker);
    }

    if (tracker) {
        std::vector<const ReplicaNode*> view(nodes.begin(), nodes.end());
        tracker->end_round(view);
    }
}

ledger::Chain make_authorization_chain(const std::string& chain_id,
                                       const std::vector<core::HostTag>& authors,
                                       const ledger::RuleSet& rules,
                                       std::uint64_t timestamp_ms) {
    ledger::Chain chain =
        ledger::start_chain(chain_id, ledger::encode_authors(authors), core::HostTag{},
                            timestamp_ms);
    if (!rules.rules.empty()) {
        if (authors.empty())
            throw core::Error("InvalidInput", "rules block needs a registered author");
        ledger::append_block(chain, ledger::PayloadKind::ContractRules, rules.encode(),
                             timestamp_ms, authors.front());
    }
    return chain;
}

}  // namespace airstack::netsim
