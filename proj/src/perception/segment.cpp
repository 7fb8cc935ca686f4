#include "harvest/perception/segment.hpp"

namespace harvest {

SegmentationParams default_segmentation_params(const GaussianColorModel& model, double margin,
                                               double min_saturation, double min_value) {
    SegmentationParams p;
    p.loglik_threshold = model.precomputed_const - margin;
    p.min_saturation = min_saturation;
    p.min_value = min_value;
    return p;
}

std::vector<std::uint8_t> segment(const ColorPointCloud& cloud, const GaussianColorModel& model,
                                  const SegmentationParams& params) {
    std::vector<std::uint8_t> mask(cloud.size(), 0);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        RotatedHSV hsv = rgb_to_rotated_hsv(cloud.points[i].color);
        if (hsv.s < params.min_saturation || hsv.v < params.min_value) continue;
        if (log_likelihood(model, hsv) >= params.loglik_threshold) mask[i] = 1;
    }
    return mask;
}

}  // namespace harvest
