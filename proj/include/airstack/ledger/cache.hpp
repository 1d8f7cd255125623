#pragma once

#include <cstddef>
#include <functional>
#include <list>
#include <map>
#include <optional>

#include "airstack/ledger/block.hpp"

namespace airstack::ledger {

/// Fixed-capacity LRU cache keyed by block digest. Backs contract-rule lookups
/// so repeated access decisions do not rescan the chain.
class BlockCache {
public:
    using Loader = std::function<std::optional<Block>(const core::Digest&)>;

    explicit BlockCache(std::size_t capacity);

    /// Returns the cached block, loading it on a miss. Eviction is strictly
    /// least-recently-used. Throws core::Error("NotFound") when the loader has
    /// no block for the digest.
    const Block& access(const core::Digest& digest, const Loader& load);

    bool contains(const core::Digest& digest) const { return index_.count(digest) > 0; }
    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }
    std::uint64_t evictions() const { return evictions_; }

private:
    std::size_t capacity_;
    std::list<Block> entries_;  // front = most recently used
    std::map<core::Digest, std::list<Block>::iterator> index_;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
    std::uint64_t evictions_ = 0;
};

}  // namespace airstack::ledger
