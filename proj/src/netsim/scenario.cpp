#include "airstack/netsim/scenario.hpp"

#include <set>

#include "airstack/core/error.hpp"

namespace airstack::netsim {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw core::Error("ConfigError", field + ": " + why);
}

}  // namespace

void validate_scenario(const Scenario& scenario) {
    if (scenario.sense_period_ms == 0) fail("sense_period_ms", "must be positive");
    if (scenario.gossip_period_ms == 0) fail("gossip_period_ms", "must be positive");
    if (scenario.move_period_ms == 0) fail("move_period_ms", "must be positive");
    if (scenario.expiry_check_period_ms == 0) fail("expiry_check_period_ms", "must be positive");
    if (scenario.cache_capacity == 0) fail("cache_capacity", "must be positive");
    if (scenario.profile_expiry_ms == 0) fail("profile_expiry_ms", "must be positive");
    if (scenario.auth_chain_id.empty()) fail("auth_chain_id", "must be nonempty");
    if (scenario.path_loss.d0_m <= 0.0) fail("path_loss.d0_m", "must be positive");
    if (scenario.path_loss.exponent_n <= 0.0) fail("path_loss.exponent_n", "must be positive");
    if (scenario.path_loss.noise_sigma_db < 0.0)
        fail("path_loss.noise_sigma_db", "must be non-negative");
    if (scenario.municipalities.empty()) fail("municipalities", "need at least one");

    std::set<std::string> network_ids;
    std::set<std::string> rsu_ids;
    for (std::size_t m = 0; m < scenario.municipalities.size(); ++m) {
        const MunicipalityConfig& muni = scenario.municipalities[m];
        std::string base = "municipalities[" + std::to_string(m) + "]";
        if (muni.network_id.empty()) fail(base + ".network_id", "must be nonempty");
        if (!network_ids.insert(muni.network_id).second)
            fail(base + ".network_id", "duplicate \"" + muni.network_id + "\"");
        if (muni.rsus.empty()) fail(base + ".rsus", "need at least one");
        for (std::size_t r = 0; r < muni.rsus.size(); ++r) {
            const spectrum::AirInterface& rsu = muni.rsus[r];
            std::string rbase = base + ".rsus[" + std::to_string(r) + "]";
            if (rsu.interface_id.empty()) fail(rbase + ".interface_id", "must be nonempty");
            if (!rsu_ids.insert(rsu.interface_id).second)
                fail(rbase + ".interface_id", "duplicate \"" + rsu.interface_id + "\"");
        }
    }

    std::set<core::MacAddress> macs;
    for (std::size_t v = 0; v < scenario.vehicles.size(); ++v) {
        const VehicleConfig& vehicle = scenario.vehicles[v];
        std::string base = "vehicles[" + std::to_string(v) + "]";
        if (!macs.insert(vehicle.mac).second)
            fail(base + ".mac", "duplicate \"" + vehicle.mac.to_string() + "\"");
        if (vehicle.route_polyline.empty()) fail(base + ".route_polyline", "must be nonempty");
        if (vehicle.speed_mps <= 0.0) fail(base + ".speed_mps", "must be positive");
    }
    for (std::size_t d = 0; d < scenario.rogue_devices.size(); ++d) {
        const RogueDeviceConfig& rogue = scenario.rogue_devices[d];
        std::string base = "rogue_devices[" + std::to_string(d) + "]";
        if (!macs.insert(rogue.mac).second)
            fail(base + ".mac", "duplicate \"" + rogue.mac.to_string() + "\"");
    }

    for (std::size_t i = 0; i < scenario.gossip_adjacency.size(); ++i) {
        const auto& [a, b] = scenario.gossip_adjacency[i];
        std::string base = "gossip_adjacency[" + std::to_string(i) + "]";
        if (a == b) fail(base, "self link \"" + a + "\"");
        if (!rsu_ids.count(a)) fail(base, "unknown interface \"" + a + "\"");
        if (!rsu_ids.count(b)) fail(base, "unknown interface \"" + b + "\"");
    }
}

}  // namespace airstack::netsim
