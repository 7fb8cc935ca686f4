#pragma once

#include <utility>
#include <vector>

#include "harvest/cloud/cloud.hpp"

namespace harvest {

/// Fuses sensor-frame views with known world-from-sensor poses into a
/// single world-frame cloud: transform, concatenate, then voxel-downsample
/// (centroid position and mean color per occupied voxel).  The output
/// viewpoint is the centroid of the view origins.  Output points are
/// ordered by voxel key, so the result is independent of view order.
ColorPointCloud merge_views(const std::vector<std::pair<ColorPointCloud, RigidTransform>>& views,
                            double voxel);

}  // namespace harvest
