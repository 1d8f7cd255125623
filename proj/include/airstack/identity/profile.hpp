#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "airstack/core/bytes.hpp"
#include "airstack/core/geometry.hpp"

namespace airstack::identity {

enum class MobilityClass : std::uint8_t {
    Unknown = 0,
    Vehicle = 1,
    Stationary = 2,
    Anomalous = 3,
};

const char* mobility_class_name(MobilityClass c);

/// One sighting of a host by an infrastructure radio.
struct Observation {
    core::HostTag host;
    core::MacAddress mac;
    std::string rsu_id;
    double rssi_dbm = 0.0;
    std::optional<core::Vec2> position_estimate;
    std::uint64_t timestamp_ms = 0;

    bool operator==(const Observation&) const = default;
};

/// Rolling behavior record for one host. Speed samples are derived from
/// consecutive position estimates; distinct_rsus tracks every radio in the
/// retained observation window.
struct BehaviorProfile {
    core::HostTag host;
    core::MacAddress mac;
    std::deque<Observation> observations;
    std::set<std::string> distinct_rsus;
    std::vector<double> speed_samples_mps;
    std::uint64_t created_at_ms = 0;
    std::uint64_t expires_at_ms = 0;
    MobilityClass mobility_class = MobilityClass::Unknown;

    bool expired(std::uint64_t now_ms) const { return expires_at_ms <= now_ms; }
};

struct ClassifierParams {
    std::size_t min_observations = 5;
    std::size_t min_distinct_rsus = 3;
    double speed_lo_mps = 1.0;
    double speed_hi_mps = 60.0;
    double max_speed_stddev_mps = 15.0;

    bool operator==(const ClassifierParams&) const = default;
};

/// Appends an observation, dropping the oldest beyond `retention` and keeping
/// distinct_rsus consistent with the retained window. A speed sample is added
/// when both this and the previous observation carry position estimates and
/// time advanced. Throws core::Error("HostMismatch") if the observation is for
/// a different host.
void ingest_observation(BehaviorProfile& profile, const Observation& obs, std::size_t retention);

/// Classifies from the current window:
///   fewer than min_observations            -> Unknown
///   mean speed below speed_lo              -> Stationary
///   mean above speed_hi or stddev too wide -> Anomalous
///   enough distinct RSUs, or the profile already reached Vehicle -> Vehicle
///   otherwise                              -> Unknown
/// A profile already classified Vehicle therefore stays Vehicle while its
/// speed statistics remain in band, even if old sightings age out of the
/// window and the distinct-RSU count dips.
MobilityClass classify_mobility(const BehaviorProfile& profile, const ClassifierParams& params);

/// True when the MAC's manufacturer prefix appears in the allowlist.
bool check_manufacturer(const core::MacAddress& mac, const std::vector<core::Oui>& allowlist);

/// Mean and population standard deviation; (0, 0) for an empty sample set.
std::pair<double, double> speed_stats(const std::vector<double>& samples);

}  // namespace airstack::identity
