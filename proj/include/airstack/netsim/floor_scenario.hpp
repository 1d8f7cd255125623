#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airstack/core/geometry.hpp"
#include "airstack/spectrum/propagation.hpp"

namespace airstack::netsim {

struct FloorAp {
    std::string interface_id;
    int floor = 1;
    /// Horizontal position; height follows from the floor number.
    core::Vec2 position;
    double tx_power_dbm = 20.0;
};

struct FloorConfig {
    std::uint64_t seed = 1;
    /// Votes taken from the k strongest registered APs; 0 means all.
    std::size_t k = 3;
    double floor_height_m = 3.0;
    spectrum::PathLossParams path_loss;
    double sensitivity_floor_dbm = spectrum::kDefaultSensitivityFloorDbm;
    std::vector<FloorAp> aps;
    core::Vec2 device_position;
    int device_floor = 1;
};

/// Emergency floor deduction for one indoor device. Measurements are
/// generated against each AP in config order (one noise draw per AP) using
/// 3D distances where floor f sits at height (f - 1) * floor_height_m, then
/// the k-strongest majority vote from deduce_floor decides. Throws
/// core::Error("NoRegisteredAps") when no AP is audible.
int run_floor_scenario(const FloorConfig& config);

}  // namespace airstack::netsim
