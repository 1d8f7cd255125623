#include "airstack/ledger/chain.hpp"

#include "airstack/core/error.hpp"

namespace airstack::ledger {

const Block& Chain::tip() const {
    if (blocks.empty())
        throw core::Error("EmptyChain", "chain \"" + chain_id + "\" has no blocks");
    return blocks.back();
}

Chain start_chain(std::string chain_id, std::vector<std::uint8_t> genesis_payload,
                  core::HostTag author, std::uint64_t timestamp_ms) {
    Chain chain;
    chain.chain_id = chain_id;
    BlockHeader header;
    header.chain_id = std::move(chain_id);
    header.height = 0;
    header.timestamp_ms = timestamp_ms;
    header.author = author;
    chain.blocks.push_back(make_block(std::move(header), PayloadKind::Genesis,
                                      std::move(genesis_payload)));
    return chain;
}

const Block& append_block(Chain& chain, PayloadKind kind, std::vector<std::uint8_t> payload,
                          std::uint64_t timestamp_ms, const core::HostTag& author) {
    if (chain.blocks.empty())
        throw core::Error("EmptyChain", "cannot append to chain without genesis");
    if (kind == PayloadKind::Genesis)
        throw core::Error("InvalidPayloadKind", "Genesis payload is only valid at height 0");
    const Block& tip = chain.blocks.back();
    if (timestamp_ms < tip.header.timestamp_ms)
        throw core::Error("StaleTimestamp", "timestamp " + std::to_string(timestamp_ms) +
                                                " precedes tip timestamp " +
                                                std::to_string(tip.header.timestamp_ms));
    BlockHeader header;
    header.chain_id = chain.chain_id;
    header.height = tip.header.height + 1;
    header.timestamp_ms = timestamp_ms;
    header.prev_digest = tip.digest;
    header.author = author;
    chain.blocks.push_back(make_block(std::move(header), kind, std::move(payload)));
    return chain.blocks.back();
}

const char* chain_fault_name(ChainFault fault) {
    switch (fault) {
        case ChainFault::EmptyChain: return "EmptyChain";
        case ChainFault::BadGenesisPrev: return "BadGenesisPrev";
        case ChainFault::LinkMismatch: return "LinkMismatch";
        case ChainFault::DigestMismatch: return "DigestMismatch";
        case ChainFault::ChainIdMismatch: return "ChainIdMismatch";
        case ChainFault::HeightMismatch: return "HeightMismatch";
        case ChainFault::TimestampRegression: return "TimestampRegression";
        case ChainFault::MisplacedGenesis: return "MisplacedGenesis";
    }
    return "Unknown";
}

ValidationReport verify_chain(const Chain& chain) {
    if (chain.blocks.empty())
        return ValidationReport::bad(0, ChainFault::EmptyChain);
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        const Block& b = chain.blocks[i];
        if (i == 0) {
            if (!b.header.prev_digest.is_zero())
                return ValidationReport::bad(i, ChainFault::BadGenesisPrev);
        } else if (b.header.prev_digest != chain.blocks[i - 1].digest) {
            return ValidationReport::bad(i, ChainFault::LinkMismatch);
        }
        if (hash_block(b.header, b.payload_kind, b.payload) != b.digest)
            return ValidationReport::bad(i, ChainFault::DigestMismatch);
        if (b.header.chain_id != chain.chain_id)
            return ValidationReport::bad(i, ChainFault::ChainIdMismatch);
        if (b.header.height != i)
            return ValidationReport::bad(i, ChainFault::HeightMismatch);
        if (i > 0 && b.header.timestamp_ms < chain.blocks[i - 1].header.timestamp_ms)
            return ValidationReport::bad(i, ChainFault::TimestampRegression);
        if ((b.payload_kind == PayloadKind::Genesis) != (i == 0))
            return ValidationReport::bad(i, ChainFault::MisplacedGenesis);
    }
    return ValidationReport::ok();
}

const Chain& resolve_fork(const Chain& local, const Chain& remote) {
    ValidationReport lr = verify_chain(local);
    if (!lr.valid)
        throw core::Error("InvalidInput", std::string("local chain invalid: ") +
                                              chain_fault_name(lr.fault) + " at height " +
                                              std::to_string(lr.first_bad_height));
    ValidationReport rr = verify_chain(remote);
    if (!rr.valid)
        throw core::Error("InvalidInput", std::string("remote chain invalid: ") +
                                              chain_fault_name(rr.fault) + " at height " +
                                              std::to_string(rr.first_bad_height));
    if (local.blocks.front().digest != remote.blocks.front().digest)
        throw core::Error("GenesisMismatch", "fork candidates do not share a genesis block");
    if (local.blocks.size() != remote.blocks.size())
        return local.blocks.size() > remote.blocks.size() ? local : remote;
    if (remote.tip().digest < local.tip().digest)
        return remote;
    return local;
}

}  // namespace airstack::ledger
