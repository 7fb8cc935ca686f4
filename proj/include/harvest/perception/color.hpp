#pragma once

#include "harvest/core/geometry.hpp"

namespace harvest {

/// HSV color with the hue rotated by +90 degrees, so the red crop hue
/// sits near 90 instead of straddling the 0/360 wrap.
struct RotatedHSV {
    double h = 0.0;  // degrees in [0, 360)
    double s = 0.0;  // [0, 1]
    double v = 0.0;  // [0, 1]
};

/// Standard RGB -> HSV conversion followed by the +90 degree hue rotation.
/// Achromatic inputs (s == 0) get the rotated conventional hue of 90.
RotatedHSV rgb_to_rotated_hsv(const Vec3& rgb);

/// Inverse conversion, used by the scene generator to color surfaces.
Vec3 rotated_hsv_to_rgb(const RotatedHSV& hsv);

/// Wraps an angular difference in degrees to (-180, 180].
double wrap_hue_residual(double delta_deg);

}  // namespace harvest
