#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "airstack/core/bytes.hpp"
#include "airstack/core/geometry.hpp"
#include "airstack/identity/profile.hpp"
#include "airstack/ledger/rules.hpp"
#include "airstack/spectrum/air_interface.hpp"

namespace airstack::netsim {

struct MunicipalityConfig {
    std::string network_id;
    /// Interfaces get owner RoadsideUnit and this municipality's network_id
    /// during world construction.
    std::vector<spectrum::AirInterface> rsus;
};

struct VehicleConfig {
    core::MacAddress mac;
    std::vector<core::Vec2> route_polyline;
    double speed_mps = 10.0;
    double tx_power_dbm = 20.0;
    /// Informational only; admission is decided by the contract rules.
    bool is_legit_manufacturer = true;
    /// Ping-pong along the polyline when true; otherwise park at the end.
    bool loop = false;
};

struct RogueDeviceConfig {
    core::MacAddress mac;
    core::Vec2 position;
    double tx_power_dbm = 20.0;
};

struct Scenario {
    std::uint64_t seed = 1;
    std::uint64_t duration_ms = 0;

    std::uint64_t sense_period_ms = 1000;
    std::uint64_t gossip_period_ms = 1000;
    std::uint64_t move_period_ms = 100;
    std::uint64_t expiry_check_period_ms = 1000;

    std::string auth_chain_id = "auth";
    std::size_t cache_capacity = 64;
    std::uint64_t profile_expiry_ms = 3'600'000;
    std::size_t observation_retention = 64;
    double sensitivity_floor_dbm = spectrum::kDefaultSensitivityFloorDbm;

    spectrum::PathLossParams path_loss;
    identity::ClassifierParams classifier;
    ledger::RuleSet rules = ledger::default_rules();
    std::vector<core::Oui> oui_allowlist;

    std::vector<MunicipalityConfig> municipalities;
    std::vector<VehicleConfig> vehicles;
    std::vector<RogueDeviceConfig> rogue_devices;

    /// Backhaul links between RSU interface_ids for ledger gossip. When empty
    /// the gossip graph is derived from radio reachability (mutual noiseless
    /// RSSI above the sensitivity floor).
    std::vector<std::pair<std::string, std::string>> gossip_adjacency;
};

/// Structural checks (unique ids, nonempty polylines, positive periods and
/// speeds, adjacency endpoints exist...). Throws core::Error("ConfigError")
/// naming the offending field.
void validate_scenario(const Scenario& scenario);

}  // namespace airstack::netsim
