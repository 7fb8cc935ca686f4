#pragma once

#include <vector>

#include "harvest/cloud/cloud.hpp"
#include "harvest/perception/color_model.hpp"

namespace harvest {

struct SegmentationParams {
    double loglik_threshold = 0.0;  // points at or above are crop
    double min_saturation = 0.0;
    double min_value = 0.0;
};

/// Default decision threshold: precomputed_const - margin.  The paper-style
/// classifier leaves the threshold free; margin 8 corresponds to a
/// Mahalanobis-distance gate of 4.
SegmentationParams default_segmentation_params(const GaussianColorModel& model,
                                               double margin = 8.0,
                                               double min_saturation = 0.0,
                                               double min_value = 0.0);

/// mask[i] is 1 iff log_likelihood >= threshold and the saturation/value
/// gates pass.
std::vector<std::uint8_t> segment(const ColorPointCloud& cloud, const GaussianColorModel& model,
                                  const SegmentationParams& params);

}  // namespace harvest
