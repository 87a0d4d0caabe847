#include "duris/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "duris/specfun.hpp"

namespace duris::moments {

namespace {

// Per-element Rician magnitude mean sqrt(pi omega / (4(k+1))) L_{1/2}(-k).
double element_mean(double k, double omega) {
    return std::sqrt(M_PI * omega / (4.0 * (k + 1.0))) * specfun::laguerre_half(k);
}

void check_domain(int n, double k, double omega, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": n must be >= 1");
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw std::domain_error(std::string(what) + ": K-factor must be >= 0");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::domain_error(std::string(what) + ": omega must be > 0");
    }
}

}  // namespace

double sum_mean(int n, double k, double omega) {
    check_domain(n, k, omega, "sum_mean");
    return n * element_mean(k, omega);
}

double sum_variance(int n, double k, double omega) {
    check_domain(n, k, omega, "sum_variance");
    const double mu1 = element_mean(k, omega);
    const double per_element = omega - mu1 * mu1;
    if (!(per_element > 0.0)) {
        // Cannot occur for valid Rician parameters; guarded anyway.
        throw std::domain_error("sum_variance: nonpositive per-element variance");
    }
    return n * per_element;
}

CltMoments product_moments(const SystemConfig& config) {
    config.validate();
    CltMoments m;
    m.mu_alpha = sum_mean(config.n_elements, config.k1, config.omega1);
    m.mu_beta = sum_mean(config.n_elements, config.k2, config.omega2);
    m.sigma2_alpha = sum_variance(config.n_elements, config.k1, config.omega1);
    m.sigma2_beta = sum_variance(config.n_elements, config.k2, config.omega2);
    m.mu_z = m.mu_alpha * m.mu_beta;
    m.sigma2_z = m.mu_alpha * m.mu_alpha * m.sigma2_beta +
                 m.mu_beta * m.mu_beta * m.sigma2_alpha;
    return m;
}

CltMoments gain_model(const SystemConfig& config) {
    if (config.topology == Topology::dual) return product_moments(config);
    config.validate();
    CltMoments m;
    m.mu_beta = sum_mean(config.n_elements, config.k2, config.omega2);
    m.sigma2_beta = sum_variance(config.n_elements, config.k2, config.omega2);
    m.mu_alpha = 1.0;
    m.sigma2_alpha = 0.0;
    m.mu_z = m.mu_beta;
    m.sigma2_z = m.sigma2_beta;
    return m;
}

GainMoments double_sum_moments(const SystemConfig& config) {
    config.validate();
    const double n = config.n_elements;
    const double m1 = element_mean(config.k1, config.omega1);
    const double m2 = element_mean(config.k2, config.omega2);
    const double v1 = config.omega1 - m1 * m1;
    const double v2 = config.omega2 - m2 * m2;
    GainMoments g;
    g.mean = n * n * m1 * m2;
    g.variance = n * n * n * m1 * m1 * v2 + n * n * m2 * m2 * v1 + n * n * v1 * v2;
    return g;
}

}  // namespace duris::moments
