#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace harvest {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Rigid body transform, rotation first then translation.
/// apply() maps points from the local frame into the parent frame.
struct RigidTransform {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    static RigidTransform identity() { return {}; }

    static RigidTransform from_axis_angle(const Vec3& axis, double angle_rad,
                                          const Vec3& translation = Vec3::Zero()) {
        RigidTransform t;
        t.rotation = Eigen::AngleAxisd(angle_rad, axis.normalized()).toRotationMatrix();
        t.translation = translation;
        return t;
    }

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
    Vec3 apply_inverse(const Vec3& p) const { return rotation.transpose() * (p - translation); }

    RigidTransform inverse() const {
        RigidTransform t;
        t.rotation = rotation.transpose();
        t.translation = -(rotation.transpose() * translation);
        return t;
    }

    RigidTransform compose(const RigidTransform& other) const {
        // this * other: other acts first.
        RigidTransform t;
        t.rotation = rotation * other.rotation;
        t.translation = rotation * other.translation + translation;
        return t;
    }

    bool is_valid(double tol = 1e-9) const {
        if (!translation.allFinite() || !rotation.allFinite()) return false;
        if (std::abs(rotation.determinant() - 1.0) > tol) return false;
        return (rotation * rotation.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol;
    }
};

/// Angle between two vectors in radians, clamped for safety near parallel.
inline double angle_between(const Vec3& a, const Vec3& b) {
    double c = a.normalized().dot(b.normalized());
    return std::acos(std::clamp(c, -1.0, 1.0));
}

/// Orthonormal frame with the tool forward (approach) axis as column 0,
/// up axis as column 2.  The up axis is the projection of `preferred_up`
/// onto the plane orthogonal to `forward`; if they are parallel the
/// world x axis is used instead.
inline Mat3 frame_from_forward_up(const Vec3& forward, const Vec3& preferred_up) {
    Vec3 f = forward.normalized();
    Vec3 up = preferred_up - preferred_up.dot(f) * f;
    if (up.norm() < 1e-9) {
        Vec3 alt = Vec3::UnitX();
        up = alt - alt.dot(f) * f;
        if (up.norm() < 1e-9) {
            alt = Vec3::UnitY();
            up = alt - alt.dot(f) * f;
        }
    }
    up.normalize();
    Mat3 frame;
    frame.col(0) = f;
    frame.col(1) = up.cross(f);
    frame.col(2) = up;
    return frame;
}

}  // namespace harvest
