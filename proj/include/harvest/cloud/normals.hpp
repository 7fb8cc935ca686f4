#pragma once

#include "harvest/cloud/cloud.hpp"
#include "harvest/cloud/kdtree.hpp"

namespace harvest {

/// Estimates a unit normal and PCA curvature per point from the local
/// covariance of neighbors within `patch_radius`.  The normal is the
/// eigenvector of the smallest eigenvalue, sign-flipped so it faces the
/// cloud viewpoint.  Curvature is lambda0 / (lambda0 + lambda1 + lambda2),
/// always in [0, 1/3].
///
/// Points with fewer than 3 points in their neighborhood (or a collinear
/// one) keep a zero normal and are flagged invalid instead of aborting.
ColorPointCloud estimate_normals(const ColorPointCloud& cloud, double patch_radius);

/// Same, reusing a prebuilt index over the cloud positions.
ColorPointCloud estimate_normals(const ColorPointCloud& cloud, const NeighborIndex& index,
                                 double patch_radius);

}  // namespace harvest
