#include "duris/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "duris/channel.hpp"
#include "duris/quadrature.hpp"
#include "duris/specfun.hpp"

namespace duris::analytic {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

void check_scale(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::domain_error("snr scale must be > 0");
    }
}

void check_moments(const moments::CltMoments& m) {
    if (!(m.sigma2_z > 0.0) || !std::isfinite(m.sigma2_z) || !std::isfinite(m.mu_z) ||
        m.mu_z < 0.0) {
        throw std::domain_error("invalid gain moments");
    }
}

// log cosh(t) for t >= 0 without overflow.
double log_cosh(double t) {
    return t + std::log1p(std::exp(-2.0 * t)) - 0.6931471805599453094;
}

}  // namespace

double snr_pdf(double gamma, const moments::CltMoments& m, double s) {
    check_scale(s);
    check_moments(m);
    if (!(gamma >= 0.0)) throw std::domain_error("snr_pdf: gamma must be >= 0");
    const double scale = s * m.sigma2_z;
    const double x = gamma / scale;
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    const double lambda = m.mu_z * m.mu_z / m.sigma2_z;
    const double log_pdf = -0.5 * (x + lambda) + log_cosh(std::sqrt(lambda * x)) -
                           0.5 * (kLog2Pi + std::log(x)) - std::log(scale);
    return std::exp(log_pdf);
}

double snr_pdf_bessel_i0(double gamma, const moments::CltMoments& m, double s) {
    check_scale(s);
    check_moments(m);
    if (!(gamma >= 0.0)) throw std::domain_error("snr_pdf: gamma must be >= 0");
    const double scale = s * m.sigma2_z;
    const double x = gamma / scale;
    const double lambda = m.mu_z * m.mu_z / m.sigma2_z;
    const double log_pdf = -std::log(2.0 * scale) - 0.5 * (x + lambda) +
                           specfun::log_bessel_i0(std::sqrt(lambda * x));
    return std::exp(log_pdf);
}

double outage_probability(const moments::CltMoments& m, OutageForm form,
                          double gamma_out, double s) {
    check_scale(s);
    check_moments(m);
    if (!(gamma_out >= 0.0)) {
        throw std::domain_error("outage_probability: threshold must be >= 0");
    }
    if (gamma_out == 0.0) return 0.0;
    const double sigma = std::sqrt(m.sigma2_z);
    const double b = std::sqrt(gamma_out / s);
    const double z = b / sigma;              // normalized threshold
    const double a = m.mu_z / sigma;         // normalized mean
    double p;
    switch (form) {
        case OutageForm::exact_folded_normal:
            p = specfun::normal_cdf((b - m.mu_z) / sigma) -
                specfun::normal_cdf((-b - m.mu_z) / sigma);
            break;
        case OutageForm::gaussian_q_pair:
            // 1 - [Q(z - a) + Q(z + a)], the tail-sum rearrangement.
            p = 1.0 - specfun::gaussian_q(z - a) - specfun::gaussian_q(z + a);
            break;
        case OutageForm::marcum:
            // Tail-difference rearrangement of the same CDF.
            p = specfun::gaussian_q(a - z) - specfun::gaussian_q(a + z);
            break;
        default:
            throw std::domain_error("unknown outage form");
    }
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}

std::vector<double> outage_curve(const SystemConfig& config, OutageForm form) {
    config.validate();
    const auto m = moments::gain_model(config);
    const double gamma_out = config.gamma_out_linear();
    std::vector<double> curve;
    curve.reserve(config.snr_db.size());
    for (double snr : config.snr_db) {
        const double s = channel::snr_scale(config, config.noise_power(snr));
        curve.push_back(outage_probability(m, form, gamma_out, s));
    }
    return curve;
}

double ergodic_capacity_integral(const moments::CltMoments& m, double s) {
    check_scale(s);
    check_moments(m);
    const double sigma = std::sqrt(m.sigma2_z);
    const double mu = m.mu_z;
    if (mu == 0.0 && sigma == 0.0) return 0.0;
    // Integrate over the gain magnitude z = sqrt(gamma/s): the folded
    // normal density removes the gamma^{-1/2} endpoint singularity.
    const double z_max = mu + 10.0 * sigma;
    const auto integrand = [&](double z) {
        const double d1 = (z - mu) / sigma;
        const double d2 = (z + mu) / sigma;
        const double folded =
            (std::exp(-0.5 * d1 * d1) + std::exp(-0.5 * d2 * d2)) /
            (sigma * std::sqrt(2.0 * M_PI));
        return std::log2(1.0 + s * z * z) * folded;
    };
    const auto result = quad::integrate(integrand, 0.0, z_max, 1e-6, 1e-300, 4000);
    if (!result.converged) {
        throw NumericError("ergodic_capacity_integral: quadrature did not converge",
                           result.error_estimate);
    }
    return result.value;
}

double ergodic_capacity_bound(const moments::CltMoments& m, double s) {
    check_scale(s);
    check_moments(m);
    return std::log2(1.0 + s * m.mu_z * m.mu_z);
}

double marcum_identity_residual(double a, double b) {
    const double pair = specfun::gaussian_q(b - a) - specfun::gaussian_q(b + a);
    return std::abs(specfun::marcum_q1(a, b) - pair);
}

std::vector<double> capacity_curve_integral(const SystemConfig& config) {
    config.validate();
    const auto m = moments::gain_model(config);
    std::vector<double> curve;
    curve.reserve(config.snr_db.size());
    for (double snr : config.snr_db) {
        const double s = channel::snr_scale(config, config.noise_power(snr));
        curve.push_back(ergodic_capacity_integral(m, s));
    }
    return curve;
}

std::vector<double> capacity_curve_bound(const SystemConfig& config) {
    config.validate();
    const auto m = moments::gain_model(config);
    std::vector<double> curve;
    curve.reserve(config.snr_db.size());
    for (double snr : config.snr_db) {
        const double s = channel::snr_scale(config, config.noise_power(snr));
        curve.push_back(ergodic_capacity_bound(m, s));
    }
    return curve;
}

}  // namespace duris::analytic
