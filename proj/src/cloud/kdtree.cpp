#include "harvest/cloud/kdtree.hpp"

#include <algorithm>

#include "harvest/core/errors.hpp"

namespace harvest {

namespace {
constexpr int kLeafSize = 16;
}

NeighborIndex::NeighborIndex(std::vector<Vec3> positions) : positions_(std::move(positions)) {
    order_.resize(positions_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
    if (!order_.empty()) root_ = build(0, static_cast<int>(order_.size()));
}

NeighborIndex::NeighborIndex(const ColorPointCloud& cloud) {
    std::vector<Vec3> pos;
    pos.reserve(cloud.size());
    for (const auto& p : cloud.points) pos.push_back(p.position);
    *this = NeighborIndex(std::move(pos));
}

int NeighborIndex::build(int begin, int end) {
    Node node;
    if (end - begin <= kLeafSize) {
        node.begin = begin;
        node.end = end;
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size()) - 1;
    }

    Vec3 lo = positions_[order_[begin]];
    Vec3 hi = lo;
    for (int i = begin + 1; i < end; ++i) {
        lo = lo.cwiseMin(positions_[order_[i]]);
        hi = hi.cwiseMax(positions_[order_[i]]);
    }
    int axis = 0;
    (hi - lo).maxCoeff(&axis);

    int mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](int a, int b) {
                         double ca = positions_[a][axis], cb = positions_[b][axis];
                         if (ca != cb) return ca < cb;
                         return a < b;
                     });

    node.axis = axis;
    node.split = positions_[order_[mid]][axis];
    int self = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    int left = build(begin, mid);
    int right = build(mid, end);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
}

void NeighborIndex::query(int node_id, const Vec3& q, double r2, std::vector<int>& out) const {
    const Node& node = nodes_[node_id];
    if (node.axis < 0) {
        for (int i = node.begin; i < node.end; ++i) {
            int id = order_[i];
            if ((positions_[id] - q).squaredNorm() <= r2) out.push_back(id);
        }
        return;
    }
    double d = q[node.axis] - node.split;
    if (d <= 0.0) {
        query(node.left, q, r2, out);
        if (d * d <= r2) query(node.right, q, r2, out);
    } else {
        query(node.right, q, r2, out);
        if (d * d <= r2) query(node.left, q, r2, out);
    }
}

std::vector<int> NeighborIndex::radius_neighbors(const Vec3& query_point, double radius) const {
    if (radius < 0.0) throw Error("radius_neighbors: negative radius");
    std::vector<int> out;
    if (root_ < 0) return out;
    query(root_, query_point, radius * radius, out);
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        double da = (positions_[a] - query_point).squaredNorm();
        double db = (positions_[b] - query_point).squaredNorm();
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

}  // namespace harvest
