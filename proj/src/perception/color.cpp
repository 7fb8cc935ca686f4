#include "harvest/perception/color.hpp"

#include <algorithm>
#include <cmath>

namespace harvest {

RotatedHSV rgb_to_rotated_hsv(const Vec3& rgb) {
    double r = rgb.x(), g = rgb.y(), b = rgb.z();
    double maxc = std::max({r, g, b});
    double minc = std::min({r, g, b});
    double delta = maxc - minc;

    double h = 0.0;
    if (delta > 0.0) {
        if (maxc == r) {
            h = 60.0 * std::fmod((g - b) / delta, 6.0);
        } else if (maxc == g) {
            h = 60.0 * ((b - r) / delta + 2.0);
        } else {
            h = 60.0 * ((r - g) / delta + 4.0);
        }
        if (h < 0.0) h += 360.0;
    }

    RotatedHSV out;
    out.h = std::fmod(h + 90.0, 360.0);
    out.s = maxc > 0.0 ? delta / maxc : 0.0;
    out.v = maxc;
    return out;
}

Vec3 rotated_hsv_to_rgb(const RotatedHSV& hsv) {
    double h = std::fmod(hsv.h - 90.0 + 360.0, 360.0);
    double s = std::clamp(hsv.s, 0.0, 1.0);
    double v = std::clamp(hsv.v, 0.0, 1.0);

    double c = v * s;
    double hp = h / 60.0;
    double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1.0) {
        r = c; g = x;
    } else if (hp < 2.0) {
        r = x; g = c;
    } else if (hp < 3.0) {
        g = c; b = x;
    } else if (hp < 4.0) {
        g = x; b = c;
    } else if (hp < 5.0) {
        r = x; b = c;
    } else {
        r = c; b = x;
    }
    double m = v - c;
    return Vec3(r + m, g + m, b + m);
}

double wrap_hue_residual(double delta_deg) {
    double d = std::fmod(delta_deg, 360.0);
    if (d <= -180.0) d += 360.0;
    if (d > 180.0) d -= 360.0;
    return d;
}

}  // namespace harvest
