#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "airstack/core/bytes.hpp"
#include "airstack/identity/profile.hpp"

namespace airstack::ledger {

/// Payload structs for each block kind, with canonical encode/decode pairs.
/// All decoders throw core::Error("MalformedPayload") on truncated, trailing,
/// or out-of-range bytes.

/// Genesis payload: u16-BE count, then 16-byte host tags. These are the hosts
/// permitted to author blocks on the chain.
std::vector<std::uint8_t> encode_authors(const std::vector<core::HostTag>& authors);
std::vector<core::HostTag> decode_authors(std::span<const std::uint8_t> data);

/// IdentityRecord: tag 16B, mac 6B, created u64-BE, expires u64-BE, class u8.
struct IdentityRecordPayload {
    core::HostTag host;
    core::MacAddress mac;
    std::uint64_t created_at_ms = 0;
    std::uint64_t expires_at_ms = 0;
    identity::MobilityClass mobility_class = identity::MobilityClass::Unknown;

    std::vector<std::uint8_t> encode() const;
    static IdentityRecordPayload decode(std::span<const std::uint8_t> data);
    bool operator==(const IdentityRecordPayload&) const = default;
};

/// AccessGrant / AccessRevocation: tag 16B, timestamp u64-BE.
struct GrantPayload {
    core::HostTag host;
    std::uint64_t granted_at_ms = 0;

    std::vector<std::uint8_t> encode() const;
    static GrantPayload decode(std::span<const std::uint8_t> data);
    bool operator==(const GrantPayload&) const = default;
};

struct RevocationPayload {
    core::HostTag host;
    std::uint64_t revoked_at_ms = 0;

    std::vector<std::uint8_t> encode() const;
    static RevocationPayload decode(std::span<const std::uint8_t> data);
    bool operator==(const RevocationPayload&) const = default;
};

enum class AccountingKind : std::uint8_t {
    Granted = 0,
    Denied = 1,
    Revoked = 2,
    HandoffObserved = 3,
};

const char* accounting_kind_name(AccountingKind kind);

/// AccountingEvent: tag 16B, kind u8, timestamp u64-BE.
struct AccountingEvent {
    core::HostTag host;
    AccountingKind kind = AccountingKind::Granted;
    std::uint64_t timestamp_ms = 0;

    std::vector<std::uint8_t> encode() const;
    static AccountingEvent decode(std::span<const std::uint8_t> data);
    bool operator==(const AccountingEvent&) const = default;
};

/// A host's current attachment point.
struct Route {
    core::HostTag host;
    std::string network_id;
    std::string interface_id;
    std::uint64_t recorded_at_ms = 0;

    /// RouteRecord: tag 16B, network_id str16, interface_id str16,
    /// recorded_at u64-BE.
    std::vector<std::uint8_t> encode() const;
    static Route decode(std::span<const std::uint8_t> data);
    bool operator==(const Route&) const = default;
};

}  // namespace airstack::ledger
