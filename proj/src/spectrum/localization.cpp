#include "airstack/spectrum/localization.hpp"

#include <cmath>
#include <numbers>

#include "airstack/core/error.hpp"

namespace airstack::spectrum {

core::Vec2 localize(std::span<const AnchorObservation> anchors) {
    if (anchors.size() < 3)
        throw core::Error("InsufficientAnchors",
                          "need at least 3 anchors, got " + std::to_string(anchors.size()));
    const core::Vec2 p0 = anchors[0].position;
    const double d0 = anchors[0].distance_m;
    // Rows: 2(xi - x0) x + 2(yi - y0) y = d0^2 - di^2 + xi^2 + yi^2 - x0^2 - y0^2
    double ata00 = 0.0, ata01 = 0.0, ata11 = 0.0, atb0 = 0.0, atb1 = 0.0;
    double max_coeff = 0.0;
    for (std::size_t i = 1; i < anchors.size(); ++i) {
        const core::Vec2 pi = anchors[i].position;
        const double di = anchors[i].distance_m;
        double ax = 2.0 * (pi.x - p0.x);
        double ay = 2.0 * (pi.y - p0.y);
        double b = d0 * d0 - di * di + pi.x * pi.x + pi.y * pi.y - p0.x * p0.x - p0.y * p0.y;
        ata00 += ax * ax;
        ata01 += ax * ay;
        ata11 += ay * ay;
        atb0 += ax * b;
        atb1 += ay * b;
        max_coeff = std::max({max_coeff, std::abs(ax), std::abs(ay)});
    }
    double det = ata00 * ata11 - ata01 * ata01;
    double scale = max_coeff * max_coeff;
    if (scale == 0.0 || std::abs(det) <= 1e-9 * scale * scale)
        throw core::Error("DegenerateGeometry", "anchors are collinear or coincident");
    return core::Vec2{(ata11 * atb0 - ata01 * atb1) / det, (ata00 * atb1 - ata01 * atb0) / det};
}

Kinematics estimate_kinematics(std::span<const TrackSample> track) {
    if (track.size() < 2)
        throw core::Error("InsufficientSamples",
                          "need at least 2 samples, got " + std::to_string(track.size()));
    double speed_sum = 0.0;
    for (std::size_t i = 1; i < track.size(); ++i) {
        if (track[i].timestamp_ms <= track[i - 1].timestamp_ms)
            throw core::Error("NonMonotonicTime", "timestamps must strictly increase");
        double dt_s =
            static_cast<double>(track[i].timestamp_ms - track[i - 1].timestamp_ms) / 1000.0;
        speed_sum += core::distance(track[i].position, track[i - 1].position) / dt_s;
    }
    Kinematics k;
    k.speed_mps = speed_sum / static_cast<double>(track.size() - 1);
    core::Vec2 net = track.back().position - track.front().position;
    double angle = std::atan2(net.y, net.x) * 180.0 / std::numbers::pi;
    if (angle < 0.0) angle += 360.0;
    if (angle >= 360.0) angle -= 360.0;
    k.heading_deg = angle;
    return k;
}

}  // namespace airstack::spectrum
