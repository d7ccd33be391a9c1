#pragma once

#include <cmath>
#include <numbers>

namespace dtqw {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Wrap an angle into [-pi, pi).
inline double wrap_angle(double x) {
    double w = std::remainder(x, two_pi); // in [-pi, pi]
    return w >= pi ? w - two_pi : w;
}

// Smallest absolute distance between two angles modulo 2*pi.
inline double angle_distance(double a, double b) {
    return std::abs(wrap_angle(a - b));
}

} // namespace dtqw
