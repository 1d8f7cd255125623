#include "airstack/spectrum/propagation.hpp"

#include <algorithm>
#include <cmath>

namespace airstack::spectrum {

double rssi_at(double tx_power_dbm, const PathLossParams& params, double distance_m,
               double noise_db) {
    double d = std::max(distance_m, params.d0_m);
    double loss = params.pl0_db + 10.0 * params.exponent_n * std::log10(d / params.d0_m);
    return std::clamp(tx_power_dbm - loss + noise_db, kRssiMinDbm, kRssiMaxDbm);
}

double invert_rssi(double rssi_dbm, double tx_power_dbm, const PathLossParams& params) {
    double exponent = (tx_power_dbm - rssi_dbm - params.pl0_db) / (10.0 * params.exponent_n);
    return params.d0_m * std::pow(10.0, exponent);
}

}  // namespace airstack::spectrum
