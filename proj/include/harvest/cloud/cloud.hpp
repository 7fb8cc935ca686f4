#pragma once

#include <cstddef>
#include <vector>

#include "harvest/core/geometry.hpp"

namespace harvest {

struct ColorPoint {
    Vec3 position = Vec3::Zero();
    Vec3 color = Vec3::Zero();  // r,g,b each in [0,1]
};

/// Point cloud with optional per-point normals and curvature.
///
/// When normals are present the three auxiliary vectors have the same
/// length as `points`.  `normal_valid[i] == 0` marks a degenerate
/// neighborhood; such normals must not be used as grasp candidates.
/// `viewpoint` is the sensor position used to orient normal signs.
struct ColorPointCloud {
    std::vector<ColorPoint> points;
    std::vector<Vec3> normals;
    std::vector<double> curvatures;
    std::vector<std::uint8_t> normal_valid;
    Vec3 viewpoint = Vec3::Zero();

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool has_normals() const { return !normals.empty(); }
};

}  // namespace harvest
