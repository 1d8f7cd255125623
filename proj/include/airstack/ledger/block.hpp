#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "airstack/core/bytes.hpp"

namespace airstack::ledger {

enum class PayloadKind : std::uint8_t {
    Genesis = 0,
    IdentityRecord = 1,
    AccessGrant = 2,
    AccessRevocation = 3,
    AccountingEvent = 4,
    RouteRecord = 5,
    ContractRules = 6,
};

const char* payload_kind_name(PayloadKind kind);

struct BlockHeader {
    std::string chain_id;
    std::uint64_t height = 0;
    std::uint64_t timestamp_ms = 0;
    core::Digest prev_digest;
    core::HostTag author;

    bool operator==(const BlockHeader&) const = default;
};

struct Block {
    BlockHeader header;
    PayloadKind payload_kind = PayloadKind::Genesis;
    std::vector<std::uint8_t> payload;
    core::Digest digest;

    bool operator==(const Block&) const = default;
};

/// Canonical byte layout hashed into the block digest:
///   chain_id   u16-BE length, then UTF-8 bytes
///   height     u64-BE
///   timestamp  u64-BE
///   prev       32 raw bytes
///   author     16 raw bytes
///   kind       1 byte
///   payload    u32-BE length, then raw bytes
std::vector<std::uint8_t> serialize_for_hash(const BlockHeader& header, PayloadKind kind,
                                             std::span<const std::uint8_t> payload);

core::Digest hash_block(const BlockHeader& header, PayloadKind kind,
                        std::span<const std::uint8_t> payload);

/// Builds a block with its digest filled in. Performs no chain validation.
Block make_block(BlockHeader header, PayloadKind kind, std::vector<std::uint8_t> payload);

}  // namespace airstack::ledger
