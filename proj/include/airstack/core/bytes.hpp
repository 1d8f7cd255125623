#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace airstack::core {

std::string to_hex(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> from_hex(const std::string& hex);

/// 32-byte hash value. Ordering is lexicographic over the raw bytes.
struct Digest {
    std::array<std::uint8_t, 32> bytes{};

    auto operator<=>(const Digest&) const = default;

    bool is_zero() const;
    std::string hex() const { return to_hex(bytes); }
    static Digest from_hex(const std::string& hex);
};

/// 16-byte host identity tag (truncated hash of a public key).
struct HostTag {
    std::array<std::uint8_t, 16> bytes{};

    auto operator<=>(const HostTag&) const = default;

    bool is_zero() const;
    std::string hex() const { return to_hex(bytes); }
    static HostTag from_hex(const std::string& hex);
};

/// Three-byte manufacturer prefix of a hardware address.
struct Oui {
    std::array<std::uint8_t, 3> bytes{};

    auto operator<=>(const Oui&) const = default;

    /// Parses "AA:BB:CC". Throws core::Error("ParseError") on malformed input.
    static Oui parse(const std::string& text);
    std::string to_string() const;
};

/// Six-byte hardware address.
struct MacAddress {
    std::array<std::uint8_t, 6> bytes{};

    auto operator<=>(const MacAddress&) const = default;

    /// Parses "AA:BB:CC:DD:EE:FF". Throws core::Error("ParseError") on malformed input.
    static MacAddress parse(const std::string& text);
    std::string to_string() const;
    Oui oui() const;
};

}  // namespace airstack::core
