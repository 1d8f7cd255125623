#include "airstack/netsim/floor_scenario.hpp"

#include <cmath>
#include <map>

#include "airstack/core/error.hpp"
#include "airstack/core/rng.hpp"
#include "airstack/spectrum/floors.hpp"

namespace airstack::netsim {

int run_floor_scenario(const FloorConfig& config) {
    if (config.aps.empty())
        throw core::Error("NoRegisteredAps", "floor config lists no access points");
    if (config.floor_height_m <= 0.0)
        throw core::Error("ConfigError", "floor_height_m: must be positive");

    core::SplitMix64 noise_rng(config.seed);
    double device_z = static_cast<double>(config.device_floor - 1) * config.floor_height_m;

    std::vector<spectrum::Measurement> measurements;
    std::map<std::string, int> registry;
    for (const FloorAp& ap : config.aps) {
        double noise = noise_rng.next_gaussian() * config.path_loss.noise_sigma_db;
        double ap_z = static_cast<double>(ap.floor - 1) * config.floor_height_m;
        double horizontal = core::distance(ap.position, config.device_position);
        double dz = ap_z - device_z;
        double d3 = std::sqrt(horizontal * horizontal + dz * dz);
        double rssi = spectrum::rssi_at(ap.tx_power_dbm, config.path_loss, d3, noise);
        if (rssi >= config.sensitivity_floor_dbm)
            measurements.push_back(
                spectrum::Measurement{"device", ap.interface_id, rssi, 1, 0});
        registry[ap.interface_id] = ap.floor;
    }
    return spectrum::deduce_floor(measurements, registry, config.k);
}

}  // namespace airstack::netsim
