#include "harvest/perception/filter.hpp"

#include "harvest/cloud/kdtree.hpp"
#include "harvest/core/errors.hpp"

namespace harvest {

std::vector<int> remove_outliers(const ColorPointCloud& cloud, const std::vector<int>& ids,
                                 double radius, int min_neighbors) {
    if (radius <= 0.0) throw Error("remove_outliers: radius must be > 0");

    std::vector<Vec3> positions;
    positions.reserve(ids.size());
    for (int id : ids) positions.push_back(cloud.points[id].position);
    NeighborIndex index(positions);

    std::vector<int> kept;
    kept.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto nb = index.radius_neighbors(positions[i], radius);
        // the query point itself is always in its own neighborhood
        if (static_cast<int>(nb.size()) - 1 >= min_neighbors) kept.push_back(ids[i]);
    }
    return kept;
}

}  // namespace harvest
