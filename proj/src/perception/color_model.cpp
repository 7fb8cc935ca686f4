#include "harvest/perception/color_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "harvest/core/errors.hpp"

namespace harvest {

namespace {
double normalizer_const(const Vec3& sigma_diag) {
    double log_det = std::log(sigma_diag.x()) + std::log(sigma_diag.y()) + std::log(sigma_diag.z());
    return -1.5 * std::log(2.0 * kPi) - 0.5 * log_det;
}
}  // namespace

GaussianColorModel GaussianColorModel::from_moments(const Vec3& mu, const Vec3& sigma_diag) {
    if ((sigma_diag.array() <= 0.0).any())
        throw InvariantViolation("color model variances must be positive");
    GaussianColorModel m;
    m.mu = mu;
    m.sigma_diag = sigma_diag;
    m.precomputed_const = normalizer_const(sigma_diag);
    return m;
}

bool GaussianColorModel::is_consistent(double tol) const {
    if ((sigma_diag.array() <= 0.0).any()) return false;
    return std::abs(precomputed_const - normalizer_const(sigma_diag)) <= tol;
}

GaussianColorModel fit_color_model(const std::vector<RotatedHSV>& samples) {
    if (samples.size() < 2) throw DegenerateSamples("need at least 2 color samples");
    const double n = static_cast<double>(samples.size());

    double cos_sum = 0.0, sin_sum = 0.0;
    double s_sum = 0.0, v_sum = 0.0;
    for (const auto& x : samples) {
        double h_rad = deg_to_rad(x.h);
        cos_sum += std::cos(h_rad);
        sin_sum += std::sin(h_rad);
        s_sum += x.s;
        v_sum += x.v;
    }
    double mean_h = rad_to_deg(std::atan2(sin_sum / n, cos_sum / n));
    if (mean_h < 0.0) mean_h += 360.0;
    double s_mean = s_sum / n;
    double v_mean = v_sum / n;

    // Circular spread: sigma = sqrt(-2 ln Rbar), mapped to degrees.
    double rbar = std::min(1.0, std::hypot(cos_sum / n, sin_sum / n));
    double h_var = 0.0;
    if (rbar < 1.0) {
        double sigma_deg = rad_to_deg(std::sqrt(-2.0 * std::log(rbar)));
        h_var = sigma_deg * sigma_deg;
    }

    double s_var = 0.0, v_var = 0.0;
    for (const auto& x : samples) {
        s_var += (x.s - s_mean) * (x.s - s_mean);
        v_var += (x.v - v_mean) * (x.v - v_mean);
    }
    s_var /= (n - 1.0);
    v_var /= (n - 1.0);

    if (h_var <= 1e-12 || s_var <= 1e-12 || v_var <= 1e-12)
        throw DegenerateSamples("zero variance in a color channel");
    return GaussianColorModel::from_moments(Vec3(mean_h, s_mean, v_mean), Vec3(h_var, s_var, v_var));
}

double log_likelihood(const GaussianColorModel& model, const RotatedHSV& x) {
    double dh = wrap_hue_residual(x.h - model.mu.x());
    double ds = x.s - model.mu.y();
    double dv = x.v - model.mu.z();
    double mahal = dh * dh / model.sigma_diag.x() + ds * ds / model.sigma_diag.y() +
                   dv * dv / model.sigma_diag.z();
    return model.precomputed_const - 0.5 * mahal;
}

std::string color_model_to_json(const GaussianColorModel& model) {
    nlohmann::json j;
    j["mu"] = {model.mu.x(), model.mu.y(), model.mu.z()};
    j["sigma"] = {model.sigma_diag.x(), model.sigma_diag.y(), model.sigma_diag.z()};
    return j.dump(2);
}

GaussianColorModel color_model_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("mu") || !j.contains("sigma"))
        throw MalformedHeader("color model JSON needs 'mu' and 'sigma'");
    auto mu = j.at("mu");
    auto sigma = j.at("sigma");
    if (mu.size() != 3 || sigma.size() != 3)
        throw MalformedHeader("color model 'mu'/'sigma' must have 3 entries");
    return GaussianColorModel::from_moments(Vec3(mu[0], mu[1], mu[2]),
                                            Vec3(sigma[0], sigma[1], sigma[2]));
}

GaussianColorModel load_color_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return color_model_from_json(ss.str());
}

void save_color_model(const GaussianColorModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");
    out << color_model_to_json(model) << "\n";
}

}  // namespace harvest
