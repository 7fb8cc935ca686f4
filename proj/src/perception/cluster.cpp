#include "harvest/perception/cluster.hpp"

#include <algorithm>
#include <deque>

#include "harvest/core/errors.hpp"

namespace harvest {

std::vector<PepperCluster> euclidean_cluster(const ColorPointCloud& cloud,
                                             const std::vector<std::uint8_t>& mask,
                                             double tolerance, int min_size) {
    if (tolerance <= 0.0) throw Error("euclidean_cluster: tolerance must be > 0");

    std::vector<int> masked_ids;
    std::vector<Vec3> masked_pos;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (i < mask.size() && mask[i]) {
            masked_ids.push_back(static_cast<int>(i));
            masked_pos.push_back(cloud.points[i].position);
        }
    }

    NeighborIndex index(masked_pos);
    std::vector<char> visited(masked_ids.size(), 0);
    std::vector<PepperCluster> clusters;

    for (std::size_t seed = 0; seed < masked_ids.size(); ++seed) {
        if (visited[seed]) continue;
        PepperCluster cluster;
        std::deque<int> frontier{static_cast<int>(seed)};
        visited[seed] = 1;
        while (!frontier.empty()) {
            int local = frontier.front();
            frontier.pop_front();
            cluster.ids.push_back(masked_ids[local]);
            for (int nb : index.radius_neighbors(masked_pos[local], tolerance)) {
                if (!visited[nb]) {
                    visited[nb] = 1;
                    frontier.push_back(nb);
                }
            }
        }
        if (static_cast<int>(cluster.ids.size()) < min_size) continue;
        std::sort(cluster.ids.begin(), cluster.ids.end());
        cluster.point_count = static_cast<int>(cluster.ids.size());
        Vec3 sum = Vec3::Zero();
        for (int id : cluster.ids) sum += cloud.points[id].position;
        cluster.centroid = sum / static_cast<double>(cluster.ids.size());
        clusters.push_back(std::move(cluster));
    }

    std::sort(clusters.begin(), clusters.end(), [](const PepperCluster& a, const PepperCluster& b) {
        if (a.point_count != b.point_count) return a.point_count > b.point_count;
        return a.centroid.x() < b.centroid.x();
    });
    return clusters;
}

int select_candidate(const std::vector<PepperCluster>& clusters, const Vec3& ee_position) {
    if (clusters.empty()) throw NoClusters("no pepper clusters to select from");
    int leader = 0;
    for (std::size_t i = 1; i < clusters.size(); ++i)
        if (clusters[i].point_count > clusters[leader].point_count) leader = static_cast<int>(i);

    double cutoff = 0.9 * clusters[leader].point_count;
    int best = leader;
    double best_dist = (clusters[leader].centroid - ee_position).norm();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (clusters[i].point_count < cutoff) continue;
        double d = (clusters[i].centroid - ee_position).norm();
        if (d < best_dist) {
            best = static_cast<int>(i);
            best_dist = d;
        }
    }
    return best;
}

}  // namespace harvest
