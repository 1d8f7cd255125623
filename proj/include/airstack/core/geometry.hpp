#pragma once

#include <cmath>
#include <compare>

namespace airstack::core {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    auto operator<=>(const Vec2&) const = default;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }

    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

}  // namespace airstack::core
