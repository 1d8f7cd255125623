#pragma once

namespace airstack::spectrum {

/// Log-distance path loss model.
struct PathLossParams {
    double pl0_db = 40.0;     // loss at the reference distance
    double d0_m = 1.0;        // reference distance
    double exponent_n = 2.0;  // environment exponent
    double noise_sigma_db = 0.0;

    bool operator==(const PathLossParams&) const = default;
};

inline constexpr double kRssiMinDbm = -120.0;
inline constexpr double kRssiMaxDbm = 30.0;
inline constexpr double kDefaultSensitivityFloorDbm = -95.0;

/// Received power for a transmitter at `distance_m`:
///   tx - (pl0 + 10 n log10(d / d0)) + noise, clamped to [-120, +30] dBm.
/// Distances below d0 are treated as d0. The caller supplies the noise draw
/// (in dB) so determinism stays in one place.
double rssi_at(double tx_power_dbm, const PathLossParams& params, double distance_m,
               double noise_db = 0.0);

/// Deterministic inverse of the noiseless model:
///   d = d0 * 10^((tx - rssi - pl0) / (10 n)).
double invert_rssi(double rssi_dbm, double tx_power_dbm, const PathLossParams& params);

}  // namespace airstack::spectrum
