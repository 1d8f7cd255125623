#include "airstack/ledger/cache.hpp"

#include "airstack/core/error.hpp"

namespace airstack::ledger {

BlockCache::BlockCache(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0)
        throw core::Error("InvalidInput", "cache capacity must be positive");
}

const Block& BlockCache::access(const core::Digest& digest, const Loader& load) {
    auto it = index_.find(digest);
    if (it != index_.end()) {
        ++hits_;
        entries_.splice(entries_.begin(), entries_, it->second);
        return *it->second;
    }
    ++misses_;
    std::optional<Block> loaded = load(digest);
    if (!loaded)
        throw core::Error("NotFound", "no block with digest " + digest.hex());
    if (entries_.size() == capacity_) {
        index_.erase(entries_.back().digest);
        entries_.pop_back();
        ++evictions_;
    }
    entries_.push_front(std::move(*loaded));
    index_[digest] = entries_.begin();
    return entries_.front();
}

}  // namespace airstack::ledger
