#include "harvest/cloud/normals.hpp"

#include <Eigen/Eigenvalues>

#include "harvest/core/errors.hpp"

namespace harvest {

ColorPointCloud estimate_normals(const ColorPointCloud& cloud, double patch_radius) {
    NeighborIndex index(cloud);
    return estimate_normals(cloud, index, patch_radius);
}

ColorPointCloud estimate_normals(const ColorPointCloud& cloud, const NeighborIndex& index,
                                 double patch_radius) {
    if (patch_radius <= 0.0) throw Error("estimate_normals: patch_radius must be > 0");

    ColorPointCloud out = cloud;
    out.normals.assign(cloud.size(), Vec3::Zero());
    out.curvatures.assign(cloud.size(), 0.0);
    out.normal_valid.assign(cloud.size(), 0);

    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Vec3& p = cloud.points[i].position;
        auto ids = index.radius_neighbors(p, patch_radius);
        if (ids.size() < 3) continue;  // degenerate neighborhood, flagged invalid

        Vec3 mean = Vec3::Zero();
        for (int id : ids) mean += cloud.points[id].position;
        mean /= static_cast<double>(ids.size());

        Mat3 cov = Mat3::Zero();
        for (int id : ids) {
            Vec3 d = cloud.points[id].position - mean;
            cov += d * d.transpose();
        }
        cov /= static_cast<double>(ids.size());

        Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
        Vec3 lambda = solver.eigenvalues();  // ascending
        double trace = lambda.sum();
        if (trace <= 0.0 || lambda[1] <= 1e-9 * lambda[2]) continue;  // collinear patch

        Vec3 n = solver.eigenvectors().col(0).normalized();
        if (n.dot(cloud.viewpoint - p) < 0.0) n = -n;
        out.normals[i] = n;
        out.curvatures[i] = std::max(0.0, lambda[0]) / trace;
        out.normal_valid[i] = 1;
    }
    return out;
}

}  // namespace harvest
