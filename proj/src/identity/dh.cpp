#include "airstack/identity/dh.hpp"

#include <cstddef>

#include "airstack/core/byte_io.hpp"
#include "airstack/core/error.hpp"
#include "airstack/core/rng.hpp"
#include "airstack/core/sha256.hpp"

namespace airstack::identity {

namespace {

bool is_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool in_public_range(const BigInt& value, const DhGroup& group) {
    return value >= 2 && value <= group.prime_p - 2;
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
    BigInt out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

void require_valid_group(const DhGroup& group) {
    if (!group.valid())
        throw core::Error("InvalidGroup", "group must have an odd prime p > 3 and g in [2, p-2]");
}

/// Minimal 8-byte big-endian limbs, most significant first.
void write_limbs(core::ByteWriter& w, const BigInt& value) {
    std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
    std::size_t limbs = value == 0 ? 0 : (bits + 63) / 64;
    w.u16_be(static_cast<std::uint16_t>(limbs));
    if (limbs == 0) return;
    std::vector<std::uint8_t> buf(limbs * 8);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, 1, 8, 1, 0, value.get_mpz_t());
    w.raw(buf);
}

}  // namespace

bool DhGroup::valid() const {
    if (prime_p <= 3 || mpz_odd_p(prime_p.get_mpz_t()) == 0 || !is_prime(prime_p))
        return false;
    return generator_g >= 2 && generator_g <= prime_p - 2;
}

DhGroup test_group() {
    return DhGroup{23, 5};
}

DhGroup default_group() {
    return DhGroup{BigInt("4611686018427394499"), 2};
}

KeyPair generate_keypair(std::uint64_t seed, const DhGroup& group) {
    require_valid_group(group);
    BigInt top = group.prime_p - 2;
    std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    core::SplitMix64 rng(seed);
    for (;;) {
        BigInt candidate = 0;
        for (std::size_t i = 0; i < words; ++i) {
            mpz_mul_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), 64);
            candidate += BigInt(rng.next());
        }
        mpz_fdiv_q_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), words * 64 - bits);
        if (candidate < 1 || candidate > top)
            continue;
        BigInt pub = powm(group.generator_g, candidate, group.prime_p);
        if (!in_public_range(pub, group))
            continue;
        return KeyPair{candidate, pub, group};
    }
}

KeyPair keypair_from_private(const BigInt& private_key, const DhGroup& group) {
    require_valid_group(group);
    if (private_key < 1 || private_key > group.prime_p - 2)
        throw core::Error("InvalidPrivateKey", "private key must lie in [1, p-2]");
    return KeyPair{private_key, powm(group.generator_g, private_key, group.prime_p), group};
}

BigInt dh_shared_secret(const KeyPair& own, const BigInt& peer_public) {
    if (!in_public_range(peer_public, own.group))
        throw core::Error("InvalidPublicKey", "peer public key outside [2, p-2]");
    return powm(peer_public, own.private_key, own.group.prime_p);
}

BigInt dh_shared_secret(const KeyPair& own, const KeyPair& peer) {
    if (own.group != peer.group)
        throw core::Error("GroupMismatch", "peers must use the same group");
    return dh_shared_secret(own, peer.public_key);
}

std::vector<std::uint8_t> encode_public_key(const DhGroup& group, const BigInt& public_key) {
    core::ByteWriter w;
    write_limbs(w, group.prime_p);
    write_limbs(w, group.generator_g);
    write_limbs(w, public_key);
    return w.take();
}

core::HostTag derive_host_tag(const BigInt& public_key, const DhGroup& group) {
    require_valid_group(group);
    if (!in_public_range(public_key, group))
        throw core::Error("InvalidPublicKey", "public key outside [2, p-2]");
    core::Digest digest = core::sha256(encode_public_key(group, public_key));
    core::HostTag tag;
    std::copy(digest.bytes.begin(), digest.bytes.begin() + tag.bytes.size(), tag.bytes.begin());
    return tag;
}

}  // namespace airstack::identity
