#include "harvest/cloud/merge.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>

#include "harvest/core/errors.hpp"

namespace harvest {

namespace {

using VoxelKey = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

struct VoxelAccum {
    Vec3 position_sum = Vec3::Zero();
    Vec3 color_sum = Vec3::Zero();
    std::size_t count = 0;
};

}  // namespace

ColorPointCloud merge_views(const std::vector<std::pair<ColorPointCloud, RigidTransform>>& views,
                            double voxel) {
    if (views.empty()) throw EmptyInput("merge_views: no views");
    if (voxel <= 0.0) throw Error("merge_views: voxel must be > 0");

    // std::map keeps voxel iteration order stable regardless of view order.
    std::map<VoxelKey, VoxelAccum> grid;
    Vec3 origin_sum = Vec3::Zero();
    for (const auto& [view, pose] : views) {
        origin_sum += pose.translation;
        for (const auto& cp : view.points) {
            Vec3 world = pose.apply(cp.position);
            VoxelKey key{static_cast<std::int64_t>(std::floor(world.x() / voxel)),
                         static_cast<std::int64_t>(std::floor(world.y() / voxel)),
                         static_cast<std::int64_t>(std::floor(world.z() / voxel))};
            auto& cell = grid[key];
            cell.position_sum += world;
            cell.color_sum += cp.color;
            ++cell.count;
        }
    }

    ColorPointCloud out;
    out.points.reserve(grid.size());
    for (const auto& [key, cell] : grid) {
        ColorPoint p;
        p.position = cell.position_sum / static_cast<double>(cell.count);
        p.color = cell.color_sum / static_cast<double>(cell.count);
        out.points.push_back(p);
    }
    out.viewpoint = origin_sum / static_cast<double>(views.size());
    return out;
}

}  // namespace harvest
