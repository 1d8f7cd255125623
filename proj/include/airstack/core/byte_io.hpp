#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "airstack/core/error.hpp"

namespace airstack::core {

/// Append-only big-endian byte sink used for canonical serializations.
class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }

    void u16_be(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }

    void u32_be(std::uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8)
            out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }

    void u64_be(std::uint64_t v) {
        for (int shift = 56; shift >= 0; shift -= 8)
            out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }

    /// IEEE-754 bit pattern, big-endian.
    void f64_be(double v) {
        u64_be(std::bit_cast<std::uint64_t>(v));
    }

    void raw(std::span<const std::uint8_t> data) {
        out_.insert(out_.end(), data.begin(), data.end());
    }

    /// u16-BE length prefix followed by UTF-8 bytes.
    void str16(const std::string& s) {
        if (s.size() > 0xFFFF)
            throw Error("MalformedPayload", "string too long for u16 length prefix");
        u16_be(static_cast<std::uint16_t>(s.size()));
        raw({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
    }

    /// u32-BE length prefix followed by raw bytes.
    void bytes32(std::span<const std::uint8_t> data) {
        u32_be(static_cast<std::uint32_t>(data.size()));
        raw(data);
    }

    const std::vector<std::uint8_t>& data() const { return out_; }
    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

/// Bounds-checked reader matching ByteWriter. Throws core::Error("MalformedPayload")
/// on truncation.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() { return take(1)[0]; }

    std::uint16_t u16_be() {
        auto b = take(2);
        return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    }

    std::uint32_t u32_be() {
        auto b = take(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | b[i];
        return v;
    }

    std::uint64_t u64_be() {
        auto b = take(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
        return v;
    }

    double f64_be() { return std::bit_cast<double>(u64_be()); }

    std::span<const std::uint8_t> raw(std::size_t n) { return take(n); }

    std::string str16() {
        std::size_t n = u16_be();
        auto b = take(n);
        return std::string(reinterpret_cast<const char*>(b.data()), b.size());
    }

    std::vector<std::uint8_t> bytes32() {
        std::size_t n = u32_be();
        auto b = take(n);
        return std::vector<std::uint8_t>(b.begin(), b.end());
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return remaining() == 0; }

    /// Verifies every byte was consumed; decoders call this to reject trailing data.
    void expect_end() const {
        if (!at_end())
            throw Error("MalformedPayload", "trailing bytes after payload");
    }

private:
    std::span<const std::uint8_t> take(std::size_t n) {
        if (remaining() < n)
            throw Error("MalformedPayload", "truncated payload");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace airstack::core
