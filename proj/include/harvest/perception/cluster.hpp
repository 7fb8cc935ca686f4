#pragma once

#include <vector>

#include "harvest/cloud/cloud.hpp"
#include "harvest/cloud/kdtree.hpp"

namespace harvest {

struct PepperCluster {
    std::vector<int> ids;  // indices into the source cloud
    Vec3 centroid = Vec3::Zero();
    int point_count = 0;
};

/// Connected components of the masked points under the distance
/// tolerance; components smaller than min_size are dropped.  Output is
/// sorted by point count descending, ties by smaller centroid x.
std::vector<PepperCluster> euclidean_cluster(const ColorPointCloud& cloud,
                                             const std::vector<std::uint8_t>& mask,
                                             double tolerance, int min_size);

/// Picks the cluster with the most points; clusters within 10% of the
/// leader count as near-ties and the closest centroid to the end effector
/// wins among them.  Returns an index into `clusters`.
int select_candidate(const std::vector<PepperCluster>& clusters, const Vec3& ee_position);

}  // namespace harvest
