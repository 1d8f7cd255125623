#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "airstack/core/geometry.hpp"

namespace airstack::spectrum {

/// Known anchor position plus the range inferred from its measurement.
struct AnchorObservation {
    core::Vec2 position;
    double distance_m = 0.0;
};

/// Linearized least-squares trilateration. Differencing each range equation
/// against the first anchor gives a linear system solved via its 2x2 normal
/// equations. Throws core::Error("InsufficientAnchors") for fewer than three
/// anchors and core::Error("DegenerateGeometry") when the anchors are
/// (numerically) collinear.
core::Vec2 localize(std::span<const AnchorObservation> anchors);

struct TrackSample {
    core::Vec2 position;
    std::uint64_t timestamp_ms = 0;
};

struct Kinematics {
    double speed_mps = 0.0;
    /// Degrees counterclockwise from +x, in [0, 360). Taken from the net
    /// displacement between the first and last samples.
    double heading_deg = 0.0;
};

/// Mean speed over consecutive sample pairs plus net heading. Throws
/// core::Error("InsufficientSamples") for fewer than two samples and
/// core::Error("NonMonotonicTime") when timestamps fail to strictly increase.
Kinematics estimate_kinematics(std::span<const TrackSample> track);

}  // namespace airstack::spectrum
