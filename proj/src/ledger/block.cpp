#include "airstack/ledger/block.hpp"

#include "airstack/core/byte_io.hpp"
#include "airstack/core/sha256.hpp"

namespace airstack::ledger {

const char* payload_kind_name(PayloadKind kind) {
    switch (kind) {
        case PayloadKind::Genesis: return "Genesis";
        case PayloadKind::IdentityRecord: return "IdentityRecord";
        case PayloadKind::AccessGrant: return "AccessGrant";
        case PayloadKind::AccessRevocation: return "AccessRevocation";
        case PayloadKind::AccountingEvent: return "AccountingEvent";
        case PayloadKind::RouteRecord: return "RouteRecord";
        case PayloadKind::ContractRules: return "ContractRules";
    }
    return "Unknown";
}

std::vector<std::uint8_t> serialize_for_hash(const BlockHeader& header, PayloadKind kind,
                                             std::span<const std::uint8_t> payload) {
    core::ByteWriter w;
    w.str16(header.chain_id);
    w.u64_be(header.height);
    w.u64_be(header.timestamp_ms);
    w.raw(header.prev_digest.bytes);
    w.raw(header.author.bytes);
    w.u8(static_cast<std::uint8_t>(kind));
    w.bytes32(payload);
    return w.take();
}

core::Digest hash_block(const BlockHeader& header, PayloadKind kind,
                        std::span<const std::uint8_t> payload) {
    return core::sha256(serialize_for_hash(header, kind, payload));
}

Block make_block(BlockHeader header, PayloadKind kind, std::vector<std::uint8_t> payload) {
    Block b;
    b.digest = hash_block(header, kind, payload);
    b.header = std::move(header);
    b.payload_kind = kind;
    b.payload = std::move(payload);
    return b;
}

}  // namespace airstack::ledger
