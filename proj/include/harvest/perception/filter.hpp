#pragma once

#include <vector>

#include "harvest/cloud/cloud.hpp"

namespace harvest {

/// Radius outlier removal.  A point survives when at least min_neighbors
/// other points of the input id set lie within `radius`.  Neighbor counts
/// are taken over the original set in a single pass, so removals do not
/// cascade.
std::vector<int> remove_outliers(const ColorPointCloud& cloud, const std::vector<int>& ids,
                                 double radius, int min_neighbors);

}  // namespace harvest
