#pragma once

#include <vector>

#include "harvest/pose/superellipsoid.hpp"

namespace harvest {

struct SuperellipsoidFit {
    SuperellipsoidModel model;
    bool converged = false;  // false means best-so-far after the iteration cap
    int iterations = 0;
    double initial_cost = 0.0;
    double final_cost = 0.0;
};

/// Fits a superellipsoid by damped nonlinear least squares on the
/// size-weighted residual sqrt(a1 a2 a3) * (F(p)^eps1 - 1).
///
/// Initialization: pose from the PCA axes and centroid (major axis as the
/// model z), semi-axes from the half-extents along those axes, exponents
/// (1, 1).  Semi-axes and exponents stay clamped to the model bounds.
/// Converged when the relative cost change drops below 1e-8, capped at
/// 200 iterations.
///
/// Throws DegenerateCluster for fewer than 50 points or a cluster whose
/// smallest PCA eigenvalue is <= 1e-8 m^2 (planar or linear data).
SuperellipsoidFit fit_superellipsoid(const std::vector<Vec3>& points);

/// Cost of a model on a point set (sum of squared residuals); exposed so
/// tests can compare fitted and initial costs independently.
double superellipsoid_cost(const SuperellipsoidModel& model, const std::vector<Vec3>& points);

}  // namespace harvest
