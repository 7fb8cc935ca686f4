#include "harvest/pose/superellipsoid.hpp"

#include <cmath>

#include "harvest/core/errors.hpp"

namespace harvest {

namespace {
double signed_pow(double base, double expo) {
    return (base < 0.0 ? -1.0 : 1.0) * std::pow(std::abs(base), expo);
}
}  // namespace

bool SuperellipsoidModel::is_valid() const {
    for (int i = 0; i < 3; ++i)
        if (semi_axes[i] < kMinAxis || semi_axes[i] > kMaxAxis) return false;
    if (eps1 < kMinEps || eps1 > kMaxEps || eps2 < kMinEps || eps2 > kMaxEps) return false;
    return pose.is_valid(1e-9);
}

double superellipsoid_implicit(const SuperellipsoidModel& model, const Vec3& world_point) {
    Vec3 q = model.pose.apply_inverse(world_point);
    double xa = std::abs(q.x() / model.semi_axes.x());
    double yb = std::abs(q.y() / model.semi_axes.y());
    double zc = std::abs(q.z() / model.semi_axes.z());
    double inner = std::pow(xa, 2.0 / model.eps2) + std::pow(yb, 2.0 / model.eps2);
    return std::pow(inner, model.eps2 / model.eps1) + std::pow(zc, 2.0 / model.eps1);
}

Vec3 superellipsoid_surface_point(const SuperellipsoidModel& model, double eta, double omega) {
    double ce = std::cos(eta), se = std::sin(eta);
    double co = std::cos(omega), so = std::sin(omega);
    Vec3 q(model.semi_axes.x() * signed_pow(ce, model.eps1) * signed_pow(co, model.eps2),
           model.semi_axes.y() * signed_pow(ce, model.eps1) * signed_pow(so, model.eps2),
           model.semi_axes.z() * signed_pow(se, model.eps1));
    return model.pose.apply(q);
}

Vec3 surface_point_along_ray(const SuperellipsoidModel& model, const Vec3& dir_world, double tol) {
    Vec3 dir = dir_world.normalized();
    if (!dir.allFinite() || dir.norm() == 0.0)
        throw Error("surface_point_along_ray: zero direction");

    auto value = [&](double t) {
        return superellipsoid_implicit(model, model.center() + t * dir);
    };

    double hi = model.semi_axes.maxCoeff();
    while (value(hi) < 1.0) hi *= 2.0;
    double lo = 0.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (value(mid) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return model.center() + 0.5 * (lo + hi) * dir;
}

}  // namespace harvest
