#pragma once

#include "harvest/core/geometry.hpp"

namespace harvest {

/// Superellipsoid solid: semi-axes a1,a2,a3 along the model x,y,z axes and
/// shape exponents eps1 (north-south) and eps2 (east-west).  The model z
/// axis is the fruit "up" direction.  The implicit function F is 1 on the
/// surface and < 1 inside.
struct SuperellipsoidModel {
    Vec3 semi_axes = Vec3(0.04, 0.04, 0.04);
    double eps1 = 1.0;
    double eps2 = 1.0;
    RigidTransform pose;  // world-from-model

    static constexpr double kMinAxis = 0.005;
    static constexpr double kMaxAxis = 0.3;
    static constexpr double kMinEps = 0.1;
    static constexpr double kMaxEps = 1.9;

    bool is_valid() const;
    Vec3 center() const { return pose.translation; }
};

/// F = ((|x/a1|^(2/e2) + |y/a2|^(2/e2))^(e2/e1) + |z/a3|^(2/e1)) with the
/// point expressed in the model frame.
double superellipsoid_implicit(const SuperellipsoidModel& model, const Vec3& world_point);

/// Point on the surface for parameters eta in [-pi/2, pi/2] and omega in
/// [-pi, pi), returned in the world frame.
Vec3 superellipsoid_surface_point(const SuperellipsoidModel& model, double eta, double omega);

/// Intersection of the surface with the ray leaving the model center along
/// `dir_world`.  Rays through the center cross the surface exactly once;
/// the root of F = 1 is bisected down to `tol` meters.
Vec3 surface_point_along_ray(const SuperellipsoidModel& model, const Vec3& dir_world,
                             double tol = 1e-7);

}  // namespace harvest
