#include "airstack/spectrum/floors.hpp"

#include <algorithm>
#include <vector>

#include "airstack/core/error.hpp"

namespace airstack::spectrum {

int deduce_floor(std::span<const Measurement> measurements,
                 const std::map<std::string, int>& ap_floor_registry, std::size_t k) {
    std::map<std::string, double> strongest_per_ap;
    for (const Measurement& m : measurements) {
        if (!ap_floor_registry.count(m.subject_id))
            continue;
        auto it = strongest_per_ap.find(m.subject_id);
        if (it == strongest_per_ap.end() || m.rssi_dbm > it->second)
            strongest_per_ap[m.subject_id] = m.rssi_dbm;
    }
    if (strongest_per_ap.empty())
        throw core::Error("NoRegisteredAps", "no measurement matches a registered AP");

    std::vector<std::pair<std::string, double>> ranked(strongest_per_ap.begin(),
                                                       strongest_per_ap.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (k == 0)
        k = ranked.size();
    if (ranked.size() > k)
        ranked.resize(k);

    std::map<int, std::size_t> votes;
    for (const auto& [ap, rssi] : ranked)
        votes[ap_floor_registry.at(ap)]++;
    int best_floor = ap_floor_registry.at(ranked.front().first);
    std::size_t best_count = 0;
    bool tied = false;
    for (const auto& [floor, count] : votes) {
        if (count > best_count) {
            best_count = count;
            best_floor = floor;
            tied = false;
        } else if (count == best_count) {
            tied = true;
        }
    }
    if (tied)
        return ap_floor_registry.at(ranked.front().first);
    return best_floor;
}

}  // namespace airstack::spectrum
