#pragma once

#include <map>
#include <string>
#include <vector>

#include "airstack/identity/profile.hpp"
#include "airstack/ledger/ledger.hpp"

namespace airstack::identity {

/// Attachment point the decision applies to.
struct ServingPoint {
    std::string network_id;
    std::string interface_id;
};

/// End-to-end access decision for one profiled host:
///   1. load the active RuleSet from the chain's newest ContractRules block
///      (through the ledger's block cache),
///   2. evaluate it against the profile,
///   3. on Grant append an AccessGrant block and record the host's route,
///   4. on Deny append a Denied AccountingEvent block.
/// Appended blocks carry ctx.now_ms and `author`. Throws
/// core::Error("NoContractOnChain") when the chain has no rules.
ledger::AccessDecision run_access_pipeline(const BehaviorProfile& profile,
                                           const ledger::EvalContext& ctx,
                                           ledger::Ledger& ledger, const std::string& chain_id,
                                           const ServingPoint& serving,
                                           const core::HostTag& author);

/// Removes every profile with expires_at_ms <= now_ms and appends an
/// AccessRevocation block per removed host. Returns the pruned tags in map
/// (tag) order.
std::vector<core::HostTag> prune_expired(std::map<core::HostTag, BehaviorProfile>& profiles,
                                         std::uint64_t now_ms, ledger::Chain& chain,
                                         const core::HostTag& author);

}  // namespace airstack::identity
