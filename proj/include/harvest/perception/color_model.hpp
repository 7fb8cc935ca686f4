#pragma once

#include <string>
#include <vector>

#include "harvest/perception/color.hpp"

namespace harvest {

/// Diagonal-covariance Gaussian over rotated-HSV, used as a naive Bayes
/// crop color classifier.  The normalization constant of the
/// log-likelihood is precomputed:
///   const = -(3/2) log(2 pi) - (1/2) log det Sigma.
struct GaussianColorModel {
    Vec3 mu = Vec3::Zero();          // (h degrees, s, v)
    Vec3 sigma_diag = Vec3::Ones();  // per-channel variances
    double precomputed_const = 0.0;

    static GaussianColorModel from_moments(const Vec3& mu, const Vec3& sigma_diag);
    bool is_consistent(double tol = 1e-12) const;
};

/// Fits the model to rotated-HSV samples.  Hue statistics are circular:
/// the mean is the sample mean direction and the variance is the squared
/// circular standard deviation, mapped to degrees.  Saturation and value
/// use the unbiased sample variance.  Throws DegenerateSamples when any
/// channel has zero variance.
GaussianColorModel fit_color_model(const std::vector<RotatedHSV>& samples);

/// precomputed_const - 1/2 (x - mu)^T Sigma^-1 (x - mu), with the hue
/// residual wrapped to (-180, 180].
double log_likelihood(const GaussianColorModel& model, const RotatedHSV& x);

std::string color_model_to_json(const GaussianColorModel& model);
GaussianColorModel color_model_from_json(const std::string& text);
GaussianColorModel load_color_model(const std::string& path);
void save_color_model(const GaussianColorModel& model, const std::string& path);

}  // namespace harvest
