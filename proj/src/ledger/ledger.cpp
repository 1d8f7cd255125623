#include "airstack/ledger/ledger.hpp"

#include <algorithm>

#include "airstack/core/error.hpp"

namespace airstack::ledger {

std::map<std::string, TipInfo> chain_tips(const Ledger& ledger) {
    std::map<std::string, TipInfo> tips;
    for (const auto& [id, chain] : ledger.chains) {
        if (chain.empty()) continue;
        tips[id] = TipInfo{chain.height(), chain.tip().digest};
    }
    return tips;
}

std::vector<FetchRequest> sync_peer(const Ledger& local,
                                    const std::map<std::string, TipInfo>& peer_tips) {
    std::vector<FetchRequest> plan;
    for (const auto& [chain_id, peer_tip] : peer_tips) {
        auto it = local.chains.find(chain_id);
        if (it == local.chains.end() || it->second.empty()) {
            plan.push_back({chain_id, 0});
            continue;
        }
        const Chain& mine = it->second;
        std::uint64_t my_height = mine.height();
        if (peer_tip.height > my_height) {
            plan.push_back({chain_id, my_height + 1});
        } else if (peer_tip.height == my_height && peer_tip.digest != mine.tip().digest) {
            plan.push_back({chain_id, 0});
        }
    }
    return plan;
}

void record_route(Ledger& ledger, const Route& route) {
    auto it = ledger.route_store.find(route.host);
    if (it == ledger.route_store.end() || route.recorded_at_ms >= it->second.recorded_at_ms)
        ledger.route_store[route.host] = route;
}

std::optional<Route> lookup_route(const Ledger& ledger, const core::HostTag& host) {
    auto it = ledger.route_store.find(host);
    if (it == ledger.route_store.end())
        return std::nullopt;
    return it->second;
}

const Block& record_accounting(Chain& chain, const AccountingEvent& event,
                               const core::HostTag& author) {
    return append_block(chain, PayloadKind::AccountingEvent, event.encode(), event.timestamp_ms,
                        author);
}

std::vector<AccountingEvent> scan_accounting(const Chain& chain) {
    std::vector<AccountingEvent> events;
    for (const Block& b : chain.blocks)
        if (b.payload_kind == PayloadKind::AccountingEvent)
            events.push_back(AccountingEvent::decode(b.payload));
    return events;
}

std::optional<core::Digest> latest_contract_rules_digest(const Chain& chain) {
    for (auto it = chain.blocks.rbegin(); it != chain.blocks.rend(); ++it)
        if (it->payload_kind == PayloadKind::ContractRules)
            return it->digest;
    return std::nullopt;
}

RuleSet active_rules(Ledger& ledger, const std::string& chain_id) {
    auto it = ledger.chains.find(chain_id);
    if (it == ledger.chains.end())
        throw core::Error("NoContractOnChain", "unknown chain \"" + chain_id + "\"");
    std::optional<core::Digest> digest = latest_contract_rules_digest(it->second);
    if (!digest)
        throw core::Error("NoContractOnChain",
                          "chain \"" + chain_id + "\" has no ContractRules block");
    const Block& block = ledger.cache.access(*digest, chain_block_loader(ledger));
    return RuleSet::decode(block.payload);
}

bool has_active_grant(const Chain& chain, const core::HostTag& host) {
    bool granted = false;
    for (const Block& b : chain.blocks) {
        if (b.payload_kind == PayloadKind::AccessGrant) {
            if (GrantPayload::decode(b.payload).host == host) granted = true;
        } else if (b.payload_kind == PayloadKind::AccessRevocation) {
            if (RevocationPayload::decode(b.payload).host == host) granted = false;
        }
    }
    return granted;
}

std::vector<core::HostTag> registered_authors(const Chain& chain) {
    if (chain.empty())
        throw core::Error("EmptyChain", "chain \"" + chain.chain_id + "\" has no genesis");
    const Block& genesis = chain.blocks.front();
    if (genesis.payload_kind != PayloadKind::Genesis)
        throw core::Error("MalformedPayload", "block at height 0 is not a Genesis block");
    return decode_authors(genesis.payload);
}

bool authors_valid(const Chain& chain) {
    std::vector<core::HostTag> authors = registered_authors(chain);
    for (std::size_t i = 1; i < chain.blocks.size(); ++i) {
        const core::HostTag& author = chain.blocks[i].header.author;
        if (std::find(authors.begin(), authors.end(), author) == authors.end())
            return false;
    }
    return true;
}

BlockCache::Loader chain_block_loader(const Ledger& ledger) {
    return [&ledger](const core::Digest& digest) -> std::optional<Block> {
        for (const auto& [id, chain] : ledger.chains)
            for (const Block& b : chain.blocks)
                if (b.digest == digest)
                    return b;
        return std::nullopt;
    };
}

}  // namespace airstack::ledger
