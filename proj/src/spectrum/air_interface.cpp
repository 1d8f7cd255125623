#include "airstack/spectrum/air_interface.hpp"

#include "airstack/core/error.hpp"

namespace airstack::spectrum {

std::vector<Measurement> sense(const AirInterface& observer,
                               std::span<const AirInterface> environment,
                               const PathLossParams& params, core::SplitMix64& noise_rng,
                               std::uint64_t now_ms, double sensitivity_floor_dbm) {
    std::vector<Measurement> heard;
    for (const AirInterface& other : environment) {
        if (other.interface_id == observer.interface_id)
            continue;
        double noise = noise_rng.next_gaussian() * params.noise_sigma_db;
        double d = core::distance(observer.position, other.position);
        double rssi = rssi_at(other.tx_power_dbm, params, d, noise);
        if (rssi >= sensitivity_floor_dbm)
            heard.push_back(Measurement{observer.interface_id, other.interface_id, rssi,
                                        other.channel, now_ms});
    }
    return heard;
}

PeeringState supplicate(const AirInterface& client, const AirInterface& target,
                        SsidPolicy target_policy, const PathLossParams& params,
                        double sensitivity_floor_dbm) {
    double d = core::distance(client.position, target.position);
    double downlink = rssi_at(target.tx_power_dbm, params, d);
    double uplink = rssi_at(client.tx_power_dbm, params, d);
    if (downlink < sensitivity_floor_dbm || uplink < sensitivity_floor_dbm)
        throw core::Error("OutOfRange", client.interface_id + " and " + target.interface_id +
                                            " cannot hear each other");
    PeeringState state{client.interface_id, target.interface_id, PeeringStatus::Rejected};
    if (target_policy == SsidPolicy::Open)
        state.status = PeeringStatus::Registered;
    return state;
}

}  // namespace airstack::spectrum
