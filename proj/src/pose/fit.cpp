#include "harvest/pose/fit.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "harvest/core/errors.hpp"

namespace harvest {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kRelTol = 1e-8;
constexpr int kNumParams = 11;  // a1 a2 a3 e1 e2 tx ty tz rx ry rz

using Params = Eigen::Matrix<double, kNumParams, 1>;

SuperellipsoidModel model_from_params(const Params& theta, const Mat3& base_rotation) {
    SuperellipsoidModel m;
    for (int i = 0; i < 3; ++i)
        m.semi_axes[i] = std::clamp(theta[i], SuperellipsoidModel::kMinAxis,
                                    SuperellipsoidModel::kMaxAxis);
    m.eps1 = std::clamp(theta[3], SuperellipsoidModel::kMinEps, SuperellipsoidModel::kMaxEps);
    m.eps2 = std::clamp(theta[4], SuperellipsoidModel::kMinEps, SuperellipsoidModel::kMaxEps);
    m.pose.translation = theta.segment<3>(5);
    Vec3 rot_vec = theta.segment<3>(8);
    double angle = rot_vec.norm();
    Mat3 delta = angle < 1e-15 ? Mat3::Identity()
                               : Eigen::AngleAxisd(angle, rot_vec / angle).toRotationMatrix();
    m.pose.rotation = base_rotation * delta;
    return m;
}

void residuals(const SuperellipsoidModel& m, const std::vector<Vec3>& points,
               Eigen::VectorXd& out) {
    double weight = std::sqrt(m.semi_axes.x() * m.semi_axes.y() * m.semi_axes.z());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double f = superellipsoid_implicit(m, points[i]);
        out[static_cast<int>(i)] = weight * (std::pow(f, m.eps1) - 1.0);
    }
}

}  // namespace

double superellipsoid_cost(const SuperellipsoidModel& model, const std::vector<Vec3>& points) {
    Eigen::VectorXd r(points.size());
    residuals(model, points, r);
    return r.squaredNorm();
}

SuperellipsoidFit fit_superellipsoid(const std::vector<Vec3>& points) {
    if (points.size() < 50)
        throw DegenerateCluster("superellipsoid fit needs at least 50 points");

    Vec3 centroid = Vec3::Zero();
    for (const auto& p : points) centroid += p;
    centroid /= static_cast<double>(points.size());

    Mat3 cov = Mat3::Zero();
    for (const auto& p : points) {
        Vec3 d = p - centroid;
        cov += d * d.transpose();
    }
    cov /= static_cast<double>(points.size());

    Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
    if (solver.eigenvalues()[0] <= 1e-8)
        throw DegenerateCluster("cluster is planar or linear");

    // Model z along the major PCA axis, right-handed frame.
    Mat3 base_rotation;
    base_rotation.col(2) = solver.eigenvectors().col(2);
    base_rotation.col(0) = solver.eigenvectors().col(0);
    base_rotation.col(1) = base_rotation.col(2).cross(base_rotation.col(0));

    Vec3 half_extents = Vec3::Zero();
    for (const auto& p : points) {
        Vec3 local = base_rotation.transpose() * (p - centroid);
        half_extents = half_extents.cwiseMax(local.cwiseAbs());
    }

    Params theta;
    theta.segment<3>(0) = half_extents.cwiseMax(SuperellipsoidModel::kMinAxis)
                              .cwiseMin(SuperellipsoidModel::kMaxAxis);
    theta[3] = 1.0;
    theta[4] = 1.0;
    theta.segment<3>(5) = centroid;
    theta.segment<3>(8).setZero();

    const int n = static_cast<int>(points.size());
    Eigen::VectorXd r(n), r_trial(n);
    Eigen::MatrixXd jac(n, kNumParams);

    SuperellipsoidModel model = model_from_params(theta, base_rotation);
    residuals(model, points, r);
    double cost = r.squaredNorm();

    SuperellipsoidFit fit;
    fit.initial_cost = cost;
    fit.model = model;

    double lambda = 1e-3;
    int iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        // Forward-difference Jacobian around the current parameters.
        for (int j = 0; j < kNumParams; ++j) {
            const double h = 1e-6;
            Params theta_j = theta;
            theta_j[j] += h;
            SuperellipsoidModel mj = model_from_params(theta_j, base_rotation);
            residuals(mj, points, r_trial);
            jac.col(j) = (r_trial - r) / h;
        }

        Eigen::MatrixXd jtj = jac.transpose() * jac;
        Eigen::VectorXd jtr = jac.transpose() * r;

        bool accepted = false;
        double new_cost = cost;
        Params theta_new = theta;
        for (int attempt = 0; attempt < 10; ++attempt) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
            Eigen::VectorXd delta = damped.ldlt().solve(-jtr);
            Params candidate = theta + delta;
            SuperellipsoidModel mc = model_from_params(candidate, base_rotation);
            residuals(mc, points, r_trial);
            double c = r_trial.squaredNorm();
            if (c < cost) {
                theta_new = candidate;
                new_cost = c;
                accepted = true;
                lambda = std::max(lambda / 3.0, 1e-12);
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted) break;  // damping saturated, keep best so far

        // Fold the rotation increment into the base rotation.
        SuperellipsoidModel accepted_model = model_from_params(theta_new, base_rotation);
        base_rotation = accepted_model.pose.rotation;
        theta_new.segment<3>(8).setZero();
        // Re-clamp explicit parameters so theta matches the model used.
        for (int i = 0; i < 3; ++i)
            theta_new[i] = std::clamp(theta_new[i], SuperellipsoidModel::kMinAxis,
                                      SuperellipsoidModel::kMaxAxis);
        theta_new[3] = std::clamp(theta_new[3], SuperellipsoidModel::kMinEps,
                                  SuperellipsoidModel::kMaxEps);
        theta_new[4] = std::clamp(theta_new[4], SuperellipsoidModel::kMinEps,
                                  SuperellipsoidModel::kMaxEps);

        theta = theta_new;
        model = accepted_model;
        residuals(model, points, r);
        double rel_change = (cost - new_cost) / std::max(cost, 1e-300);
        cost = new_cost;
        if (rel_change < kRelTol) {
            fit.converged = true;
            ++iter;
            break;
        }
    }

    fit.model = model;
    fit.iterations = iter;
    fit.final_cost = cost;
    return fit;
}

}  // namespace harvest
