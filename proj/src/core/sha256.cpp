#include "airstack/core/sha256.hpp"

#include <openssl/evp.h>

#include <memory>

#include "airstack/core/error.hpp"

namespace airstack::core {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out;
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), out.bytes.data(), &len) != 1 || len != out.bytes.size()) {
        throw Error("InternalError", "SHA-256 computation failed");
    }
    return out;
}

}  // namespace airstack::core
