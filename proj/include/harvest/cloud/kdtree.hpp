#pragma once

#include <vector>

#include "harvest/cloud/cloud.hpp"
#include "harvest/core/geometry.hpp"

namespace harvest {

/// Spatial index over a fixed set of positions.  Read-only after
/// construction; concurrent queries are safe.
///
/// radius_neighbors returns exactly the points with Euclidean distance
/// <= r, sorted ascending by distance with ties broken by point id.
class NeighborIndex {
public:
    NeighborIndex() = default;
    explicit NeighborIndex(std::vector<Vec3> positions);
    explicit NeighborIndex(const ColorPointCloud& cloud);

    std::vector<int> radius_neighbors(const Vec3& query, double radius) const;

    std::size_t size() const { return positions_.size(); }
    const Vec3& position(int id) const { return positions_[static_cast<std::size_t>(id)]; }

private:
    struct Node {
        int axis = -1;        // -1 marks a leaf
        double split = 0.0;
        int left = -1, right = -1;
        int begin = 0, end = 0;  // index range into order_ for leaves
    };

    int build(int begin, int end);
    void query(int node, const Vec3& q, double r2, std::vector<int>& out) const;

    std::vector<Vec3> positions_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace harvest
