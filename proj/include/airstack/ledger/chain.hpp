#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "airstack/ledger/block.hpp"

namespace airstack::ledger {

struct Chain {
    std::string chain_id;
    std::vector<Block> blocks;

    bool empty() const { return blocks.empty(); }
    std::uint64_t height() const { return blocks.empty() ? 0 : blocks.size() - 1; }

    /// Throws core::Error("EmptyChain") on a chain without a genesis block.
    const Block& tip() const;

    bool operator==(const Chain&) const = default;
};

/// Creates a chain holding only the genesis block (height 0, zero prev digest).
Chain start_chain(std::string chain_id, std::vector<std::uint8_t> genesis_payload,
                  core::HostTag author = {}, std::uint64_t timestamp_ms = 0);

/// Appends a block to the tip. Throws core::Error codes:
///   "EmptyChain"         chain has no genesis
///   "StaleTimestamp"     timestamp_ms older than the tip's
///   "InvalidPayloadKind" kind is Genesis (only height 0 may carry it)
const Block& append_block(Chain& chain, PayloadKind kind, std::vector<std::uint8_t> payload,
                          std::uint64_t timestamp_ms, const core::HostTag& author);

enum class ChainFault {
    EmptyChain,
    BadGenesisPrev,
    LinkMismatch,
    DigestMismatch,
    ChainIdMismatch,
    HeightMismatch,
    TimestampRegression,
    MisplacedGenesis,
};

const char* chain_fault_name(ChainFault fault);

struct ValidationReport {
    bool valid = true;
    /// Lowest height at which a violation occurs; meaningful only when !valid.
    std::uint64_t first_bad_height = 0;
    ChainFault fault = ChainFault::EmptyChain;

    static ValidationReport ok() { return {}; }
    static ValidationReport bad(std::uint64_t height, ChainFault fault) {
        return {false, height, fault};
    }

    bool operator==(const ValidationReport&) const = default;
};

/// Full-chain check: digests recompute, prev links hold, chain_id and heights
/// match, timestamps never regress, Genesis appears exactly at height 0.
/// Reports the lowest offending height. An empty chain is invalid.
ValidationReport verify_chain(const Chain& chain);

/// Longest-chain fork choice. Both inputs must verify ("InvalidInput") and
/// share a genesis digest ("GenesisMismatch"). On equal heights the chain with
/// the lexicographically smaller tip digest wins, so any replica set converges
/// on the same branch without coordination.
const Chain& resolve_fork(const Chain& local, const Chain& remote);

}  // namespace airstack::ledger
