#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "airstack/spectrum/air_interface.hpp"

namespace airstack::spectrum {

/// Emergency floor deduction: of the measurements whose subject appears in the
/// AP registry (interface_id -> floor), keep the strongest per AP, order by
/// received power (ties broken by interface_id), and take the k strongest. A
/// strict plurality of their floors wins; otherwise the strongest AP's floor
/// is returned. Throws core::Error("NoRegisteredAps") when no measurement
/// matches the registry.
int deduce_floor(std::span<const Measurement> measurements,
                 const std::map<std::string, int>& ap_floor_registry, std::size_t k);

}  // namespace airstack::spectrum
