#include "airstack/core/bytes.hpp"

#include <algorithm>

#include "airstack/core/error.hpp"

namespace airstack::core {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0F]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw Error("ParseError", "hex string has odd length");
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw Error("ParseError", "invalid hex digit in \"" + hex + "\"");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

bool Digest::is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

Digest Digest::from_hex(const std::string& hex) {
    auto raw = ::airstack::core::from_hex(hex);
    if (raw.size() != 32)
        throw Error("ParseError", "digest hex must encode 32 bytes");
    Digest d;
    std::copy(raw.begin(), raw.end(), d.bytes.begin());
    return d;
}

bool HostTag::is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

HostTag HostTag::from_hex(const std::string& hex) {
    auto raw = ::airstack::core::from_hex(hex);
    if (raw.size() != 16)
        throw Error("ParseError", "host tag hex must encode 16 bytes");
    HostTag t;
    std::copy(raw.begin(), raw.end(), t.bytes.begin());
    return t;
}

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> parse_colon_groups(const std::string& text, const char* what) {
    std::array<std::uint8_t, N> out{};
    if (text.size() != N * 3 - 1)
        throw Error("ParseError", std::string(what) + " has wrong length: \"" + text + "\"");
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t at = i * 3;
        int hi = hex_nibble(text[at]);
        int lo = hex_nibble(text[at + 1]);
        if (hi < 0 || lo < 0)
            throw Error("ParseError", std::string(what) + " has invalid hex: \"" + text + "\"");
        if (i + 1 < N && text[at + 2] != ':')
            throw Error("ParseError", std::string(what) + " missing ':' separator: \"" + text + "\"");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

template <std::size_t N>
std::string format_colon_groups(const std::array<std::uint8_t, N>& bytes) {
    static const char* digits = "0123456789ABCDEF";
    std::string out;
    out.reserve(N * 3 - 1);
    for (std::size_t i = 0; i < N; ++i) {
        if (i) out.push_back(':');
        out.push_back(digits[bytes[i] >> 4]);
        out.push_back(digits[bytes[i] & 0x0F]);
    }
    return out;
}

}  // namespace

Oui Oui::parse(const std::string& text) {
    return Oui{parse_colon_groups<3>(text, "OUI")};
}

std::string Oui::to_string() const {
    return format_colon_groups(bytes);
}

MacAddress MacAddress::parse(const std::string& text) {
    return MacAddress{parse_colon_groups<6>(text, "MAC address")};
}

std::string MacAddress::to_string() const {
    return format_colon_groups(bytes);
}

Oui MacAddress::oui() const {
    return Oui{{bytes[0], bytes[1], bytes[2]}};
}

}  // namespace airstack::core
