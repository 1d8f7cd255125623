#include "airstack/identity/pipeline.hpp"

#include "airstack/core/error.hpp"

namespace airstack::identity {

ledger::AccessDecision run_access_pipeline(const BehaviorProfile& profile,
                                           const ledger::EvalContext& ctx,
                                           ledger::Ledger& ledger, const std::string& chain_id,
                                           const ServingPoint& serving,
                                           const core::HostTag& author) {
    ledger::RuleSet rules = ledger::active_rules(ledger, chain_id);
    ledger::AccessDecision decision = ledger::evaluate_contract(rules, profile, ctx);
    ledger::Chain& chain = ledger.chains.at(chain_id);
    if (decision.verdict == ledger::Verdict::Grant) {
        ledger::GrantPayload grant{profile.host, ctx.now_ms};
        ledger::append_block(chain, ledger::PayloadKind::AccessGrant, grant.encode(), ctx.now_ms,
                             author);
        ledger::record_route(
            ledger, ledger::Route{profile.host, serving.network_id, serving.interface_id,
                                  ctx.now_ms});
    } else {
        ledger::record_accounting(
            chain, ledger::AccountingEvent{profile.host, ledger::AccountingKind::Denied, ctx.now_ms},
            author);
    }
    return decision;
}

std::vector<core::HostTag> prune_expired(std::map<core::HostTag, BehaviorProfile>& profiles,
                                         std::uint64_t now_ms, ledger::Chain& chain,
                                         const core::HostTag& author) {
    std::vector<core::HostTag> pruned;
    for (auto it = profiles.begin(); it != profiles.end();) {
        if (it->second.expired(now_ms)) {
            pruned.push_back(it->first);
            it = profiles.erase(it);
        } else {
            ++it;
        }
    }
    for (const core::HostTag& host : pruned) {
        ledger::RevocationPayload payload{host, now_ms};
        ledger::append_block(chain, ledger::PayloadKind::AccessRevocation, payload.encode(),
                             now_ms, author);
    }
    return pruned;
}

}  // namespace airstack::identity
