#include "airstack/identity/profile.hpp"

#include <algorithm>
#include <cmath>

#include "airstack/core/error.hpp"

namespace airstack::identity {

const char* mobility_class_name(MobilityClass c) {
    switch (c) {
        case MobilityClass::Unknown: return "Unknown";
        case MobilityClass::Vehicle: return "Vehicle";
        case MobilityClass::Stationary: return "Stationary";
        case MobilityClass::Anomalous: return "Anomalous";
    }
    return "Unknown";
}

void ingest_observation(BehaviorProfile& profile, const Observation& obs, std::size_t retention) {
    if (obs.host != profile.host)
        throw core::Error("HostMismatch", "observation host " + obs.host.hex() +
                                              " does not match profile host " +
                                              profile.host.hex());
    if (!profile.observations.empty()) {
        const Observation& prev = profile.observations.back();
        if (prev.position_estimate && obs.position_estimate &&
            obs.timestamp_ms > prev.timestamp_ms) {
            double dt_s = static_cast<double>(obs.timestamp_ms - prev.timestamp_ms) / 1000.0;
            double dist_m = core::distance(*obs.position_estimate, *prev.position_estimate);
            profile.speed_samples_mps.push_back(dist_m / dt_s);
        }
    }
    profile.observations.push_back(obs);
    while (retention > 0 && profile.observations.size() > retention)
        profile.observations.pop_front();
    profile.distinct_rsus.clear();
    for (const Observation& o : profile.observations)
        profile.distinct_rsus.insert(o.rsu_id);
}

std::pair<double, double> speed_stats(const std::vector<double>& samples) {
    if (samples.empty())
        return {0.0, 0.0};
    double sum = 0.0;
    for (double s : samples) sum += s;
    double mean = sum / static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples) var += (s - mean) * (s - mean);
    var /= static_cast<double>(samples.size());
    return {mean, std::sqrt(var)};
}

MobilityClass classify_mobility(const BehaviorProfile& profile, const ClassifierParams& params) {
    if (profile.observations.size() < params.min_observations)
        return MobilityClass::Unknown;
    auto [mean, stddev] = speed_stats(profile.speed_samples_mps);
    if (mean < params.speed_lo_mps)
        return MobilityClass::Stationary;
    if (mean > params.speed_hi_mps || stddev > params.max_speed_stddev_mps)
        return MobilityClass::Anomalous;
    if (profile.distinct_rsus.size() >= params.min_distinct_rsus ||
        profile.mobility_class == MobilityClass::Vehicle)
        return MobilityClass::Vehicle;
    return MobilityClass::Unknown;
}

bool check_manufacturer(const core::MacAddress& mac, const std::vector<core::Oui>& allowlist) {
    core::Oui oui = mac.oui();
    return std::find(allowlist.begin(), allowlist.end(), oui) != allowlist.end();
}

}  // namespace airstack::identity
