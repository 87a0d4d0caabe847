#pragma once

#include "duris/config.hpp"

namespace duris::moments {

// Gaussian-approximation statistics of the cascaded gain.
// The product model takes the two hop sums A and B as independent
// Gaussians, so mu_z = mu_alpha * mu_beta and
// sigma2_z = mu_alpha^2 sigma2_beta + mu_beta^2 sigma2_alpha.
struct CltMoments {
    double mu_alpha = 0.0;
    double mu_beta = 0.0;
    double sigma2_alpha = 0.0;
    double sigma2_beta = 0.0;
    double mu_z = 0.0;
    double sigma2_z = 0.0;
};

// Mean of a sum of n i.i.d. Rician magnitudes:
//   n * sqrt(pi omega / (4 (k+1))) * L_{1/2}(-k).
double sum_mean(int n, double k, double omega);

// Variance of the same sum, n * (omega - mu1^2) with mu1 the per-element
// mean.
double sum_variance(int n, double k, double omega);

// Assembles the product-model moments for the dual-hop cascade:
// hop 1 uses (N, K1, Omega1), hop 2 (N, K2, Omega2).
CltMoments product_moments(const SystemConfig& config);

// Gaussian model actually driving the SNR distribution for a topology:
// dual uses the product moments, the single-RIS baseline the one-hop sum
// moments (mu_z = mu_beta, sigma2_z = sigma2_beta).
CltMoments gain_model(const SystemConfig& config);

// Exact first two moments of the double-sum gain sum_i (sum_k a_ki) b_i,
// used in reports to quantify how far the product model sits from the
// sampled distribution. Mean matches mu_z; the variance is
//   N^3 m1^2 v2 + N^2 m2^2 v1 + N^2 v1 v2
// with per-element means m and variances v of the two hops.
struct GainMoments {
    double mean = 0.0;
    double variance = 0.0;
};
GainMoments double_sum_moments(const SystemConfig& config);

}  // namespace duris::moments
