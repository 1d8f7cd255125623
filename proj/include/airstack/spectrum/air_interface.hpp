#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "airstack/core/geometry.hpp"
#include "airstack/core/rng.hpp"
#include "airstack/spectrum/propagation.hpp"

namespace airstack::spectrum {

enum class InterfaceOwner { RoadsideUnit, AccessPoint, Vehicle, Device };

/// One radio in the simulated band.
struct AirInterface {
    std::string interface_id;
    InterfaceOwner owner = InterfaceOwner::Device;
    core::Vec2 position;
    double tx_power_dbm = 20.0;
    int channel = 1;
    std::string network_id;
    bool ssid_open = false;
    /// Building floor, 1-based; set only for AccessPoint interfaces.
    std::optional<int> floor;
};

struct Measurement {
    std::string observer_id;
    std::string subject_id;
    double rssi_dbm = 0.0;
    int channel = 1;
    std::uint64_t timestamp_ms = 0;

    bool operator==(const Measurement&) const = default;
};

/// Passive scan: one measurement per other interface whose received power
/// clears the sensitivity floor. One gaussian noise draw (scaled by
/// noise_sigma_db) is consumed per other interface in environment order,
/// whether or not the result is audible, so noise streams stay aligned across
/// observers.
std::vector<Measurement> sense(const AirInterface& observer,
                               std::span<const AirInterface> environment,
                               const PathLossParams& params, core::SplitMix64& noise_rng,
                               std::uint64_t now_ms,
                               double sensitivity_floor_dbm = kDefaultSensitivityFloorDbm);

enum class SsidPolicy { Open, Closed };
enum class PeeringStatus { Registered, Rejected };

struct PeeringState {
    std::string client_id;
    std::string target_id;
    PeeringStatus status = PeeringStatus::Rejected;

    bool operator==(const PeeringState&) const = default;
};

/// Association attempt. Both directions must clear the sensitivity floor under
/// the noiseless model or core::Error("OutOfRange") is thrown; the target's
/// SSID policy then decides Registered versus Rejected.
PeeringState supplicate(const AirInterface& client, const AirInterface& target,
                        SsidPolicy target_policy, const PathLossParams& params,
                        double sensitivity_floor_dbm = kDefaultSensitivityFloorDbm);

}  // namespace airstack::spectrum
