#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "airstack/ledger/cache.hpp"
#include "airstack/ledger/chain.hpp"
#include "airstack/ledger/payloads.hpp"
#include "airstack/ledger/rules.hpp"

namespace airstack::ledger {

/// One replica's view: its chains, the derived route table, and a block cache.
struct Ledger {
    std::map<std::string, Chain> chains;
    std::map<core::HostTag, Route> route_store;
    BlockCache cache{64};
};

struct TipInfo {
    std::uint64_t height = 0;
    core::Digest digest;

    bool operator==(const TipInfo&) const = default;
};

std::map<std::string, TipInfo> chain_tips(const Ledger& ledger);

struct FetchRequest {
    std::string chain_id;
    /// First height to fetch; 0 means the whole chain (unknown chain or
    /// suspected fork at equal height).
    std::uint64_t from_height = 0;

    bool operator==(const FetchRequest&) const = default;
};

/// Gossip pull planning against a peer's advertised tips. Requests are
/// returned in chain_id order. No request is made for chains where the local
/// tip is at least as high and not in conflict.
std::vector<FetchRequest> sync_peer(const Ledger& local, const std::map<std::string, TipInfo>& peer_tips);

/// Latest-wins route table update keyed by host; an update older than the
/// stored entry is ignored.
void record_route(Ledger& ledger, const Route& route);
std::optional<Route> lookup_route(const Ledger& ledger, const core::HostTag& host);

/// Appends an AccountingEvent block.
const Block& record_accounting(Chain& chain, const AccountingEvent& event,
                               const core::HostTag& author);
std::vector<AccountingEvent> scan_accounting(const Chain& chain);

/// Digest of the newest ContractRules block, scanning from the tip.
std::optional<core::Digest> latest_contract_rules_digest(const Chain& chain);

/// Fetches the newest ContractRules block through the ledger's cache and
/// decodes it. Throws core::Error("NoContractOnChain") when the chain carries
/// no ContractRules block.
RuleSet active_rules(Ledger& ledger, const std::string& chain_id);

/// Grant state from chain order: the final AccessGrant / AccessRevocation
/// touching the host wins.
bool has_active_grant(const Chain& chain, const core::HostTag& host);

/// Tags listed in the genesis authors payload.
/// Throws core::Error("MalformedPayload") if the genesis payload is not an
/// author list, core::Error("EmptyChain") on an empty chain.
std::vector<core::HostTag> registered_authors(const Chain& chain);

/// True when every non-genesis block was authored by a registered author.
bool authors_valid(const Chain& chain);

/// Loader for BlockCache::access that scans this ledger's chains.
BlockCache::Loader chain_block_loader(const Ledger& ledger);

}  // namespace airstack::ledger
