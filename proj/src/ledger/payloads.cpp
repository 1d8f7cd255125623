#include "airstack/ledger/payloads.hpp"

#include <algorithm>

#include "airstack/core/byte_io.hpp"
#include "airstack/core/error.hpp"

namespace airstack::ledger {

namespace {

core::HostTag read_tag(core::ByteReader& r) {
    core::HostTag tag;
    auto s = r.raw(tag.bytes.size());
    std::copy(s.begin(), s.end(), tag.bytes.begin());
    return tag;
}

core::MacAddress read_mac(core::ByteReader& r) {
    core::MacAddress mac;
    auto s = r.raw(mac.bytes.size());
    std::copy(s.begin(), s.end(), mac.bytes.begin());
    return mac;
}

}  // namespace

std::vector<std::uint8_t> encode_authors(const std::vector<core::HostTag>& authors) {
    core::ByteWriter w;
    if (authors.size() > 0xFFFF)
        throw core::Error("MalformedPayload", "too many authors");
    w.u16_be(static_cast<std::uint16_t>(authors.size()));
    for (const core::HostTag& tag : authors) w.raw(tag.bytes);
    return w.take();
}

std::vector<core::HostTag> decode_authors(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    std::uint16_t count = r.u16_be();
    std::vector<core::HostTag> authors;
    authors.reserve(count);
    for (std::uint16_t i = 0; i < count; ++i) authors.push_back(read_tag(r));
    r.expect_end();
    return authors;
}

std::vector<std::uint8_t> IdentityRecordPayload::encode() const {
    core::ByteWriter w;
    w.raw(host.bytes);
    w.raw(mac.bytes);
    w.u64_be(created_at_ms);
    w.u64_be(expires_at_ms);
    w.u8(static_cast<std::uint8_t>(mobility_class));
    return w.take();
}

IdentityRecordPayload IdentityRecordPayload::decode(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    IdentityRecordPayload p;
    p.host = read_tag(r);
    p.mac = read_mac(r);
    p.created_at_ms = r.u64_be();
    p.expires_at_ms = r.u64_be();
    std::uint8_t cls = r.u8();
    if (cls > static_cast<std::uint8_t>(identity::MobilityClass::Anomalous))
        throw core::Error("MalformedPayload", "unknown mobility class " + std::to_string(cls));
    p.mobility_class = static_cast<identity::MobilityClass>(cls);
    r.expect_end();
    return p;
}

std::vector<std::uint8_t> GrantPayload::encode() const {
    core::ByteWriter w;
    w.raw(host.bytes);
    w.u64_be(granted_at_ms);
    return w.take();
}

GrantPayload GrantPayload::decode(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    GrantPayload p;
    p.host = read_tag(r);
    p.granted_at_ms = r.u64_be();
    r.expect_end();
    return p;
}

std::vector<std::uint8_t> RevocationPayload::encode() const {
    core::ByteWriter w;
    w.raw(host.bytes);
    w.u64_be(revoked_at_ms);
    return w.take();
}

RevocationPayload RevocationPayload::decode(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    RevocationPayload p;
    p.host = read_tag(r);
    p.revoked_at_ms = r.u64_be();
    r.expect_end();
    return p;
}

const char* accounting_kind_name(AccountingKind kind) {
    switch (kind) {
        case AccountingKind::Granted: return "Granted";
        case AccountingKind::Denied: return "Denied";
        case AccountingKind::Revoked: return "Revoked";
        case AccountingKind::HandoffObserved: return "HandoffObserved";
    }
    return "Unknown";
}

std::vector<std::uint8_t> AccountingEvent::encode() const {
    core::ByteWriter w;
    w.raw(host.bytes);
    w.u8(static_cast<std::uint8_t>(kind));
    w.u64_be(timestamp_ms);
    return w.take();
}

AccountingEvent AccountingEvent::decode(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    AccountingEvent e;
    e.host = read_tag(r);
    std::uint8_t kind = r.u8();
    if (kind > static_cast<std::uint8_t>(AccountingKind::HandoffObserved))
        throw core::Error("MalformedPayload", "unknown accounting kind " + std::to_string(kind));
    e.kind = static_cast<AccountingKind>(kind);
    e.timestamp_ms = r.u64_be();
    r.expect_end();
    return e;
}

std::vector<std::uint8_t> Route::encode() const {
    core::ByteWriter w;
    w.raw(host.bytes);
    w.str16(network_id);
    w.str16(interface_id);
    w.u64_be(recorded_at_ms);
    return w.take();
}

Route Route::decode(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    Route route;
    route.host = read_tag(r);
    route.network_id = r.str16();
    route.interface_id = r.str16();
    route.recorded_at_ms = r.u64_be();
    r.expect_end();
    return route;
}

}  // namespace airstack::ledger
