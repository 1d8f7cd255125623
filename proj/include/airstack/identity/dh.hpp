#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "airstack/core/bytes.hpp"

namespace airstack::identity {

using BigInt = mpz_class;

struct DhGroup {
    BigInt prime_p;
    BigInt generator_g;

    /// p an odd prime greater than 3, g in [2, p-2].
    bool valid() const;

    bool operator==(const DhGroup&) const = default;
};

/// Toy group from the classic worked example; fine for tests, useless for
/// security.
DhGroup test_group();  // p = 23, g = 5

/// 63-bit safe prime used as the simulation default.
DhGroup default_group();  // p = 0x40000000000019C3, g = 2

struct KeyPair {
    BigInt private_key;
    BigInt public_key;
    DhGroup group;
};

/// Deterministic keygen. The private key is drawn uniformly from [1, p-2] by
/// rejection sampling over a SplitMix64 stream seeded with `seed`: each
/// attempt consumes ceil(bits(p-2) / 64) words, assembles them most
/// significant word first, and shifts right to exactly bits(p-2) bits.
/// Candidates outside [1, p-2], and privates whose public g^x mod p falls
/// outside [2, p-2], are skipped. Throws core::Error("InvalidGroup").
KeyPair generate_keypair(std::uint64_t seed, const DhGroup& group);

/// Builds the key pair for a caller-chosen private key in [1, p-2].
/// Throws core::Error("InvalidGroup") or core::Error("InvalidPrivateKey").
KeyPair keypair_from_private(const BigInt& private_key, const DhGroup& group);

/// peer_public^private mod p. Throws core::Error("InvalidPublicKey") for a
/// peer key outside [2, p-2].
BigInt dh_shared_secret(const KeyPair& own, const BigInt& peer_public);

/// Convenience overload checking the peers agree on the group first.
/// Throws core::Error("GroupMismatch").
BigInt dh_shared_secret(const KeyPair& own, const KeyPair& peer);

/// Canonical bytes hashed into a host tag: for each of p, g, public in that
/// order, a u16-BE limb count then the value as minimal 8-byte big-endian
/// limbs, most significant limb first.
std::vector<std::uint8_t> encode_public_key(const DhGroup& group, const BigInt& public_key);

/// First 16 bytes of SHA-256 over encode_public_key. Throws
/// core::Error("InvalidPublicKey") for a key outside [2, p-2].
core::HostTag derive_host_tag(const BigInt& public_key, const DhGroup& group);

}  // namespace airstack::identity
