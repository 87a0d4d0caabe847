#pragma once

#include <vector>

#include "duris/config.hpp"
#include "duris/moments.hpp"

namespace duris::analytic {

// Three algebraic routes to the same folded-normal outage CDF.
// The printed Marcum and Q-pair expressions contain the SNR inside their
// own CDF argument; they are evaluated here under the normalization
// (sigma_Z^2 zeta^2 gamma_m) -> (sigma_Z^2 s), (sigma_Z^2 zeta^2) ->
// sigma_Z^2, which reduces all three to rearrangements of
// P(|Z| <= sqrt(gamma/s)) for Z ~ N(mu_Z, sigma_Z^2).
enum class OutageForm { marcum, gaussian_q_pair, exact_folded_normal };

// Density of gamma = s Z^2 (the scaled one-degree noncentral chi square
// the analysis assigns to the SNR), evaluated in the log domain so the
// decaying exponential and the exploding cosh kernel are combined before
// exponentiation. Diverges as gamma^{-1/2} at the origin.
double snr_pdf(double gamma, const moments::CltMoments& m, double s);

// The printed density with the order-zero Bessel kernel (the two-degree
// kernel). Kept as a diagnostic; the half-order kernel above is the one
// consistent with the folded-normal CDF.
double snr_pdf_bessel_i0(double gamma, const moments::CltMoments& m, double s);

// P(gamma_m <= gamma_out) for SNR scale s = zeta-factor * Es / N0.
double outage_probability(const moments::CltMoments& m, OutageForm form,
                          double gamma_out, double s);

// Outage across the config's SNR grid (threshold and scale taken from
// the config), one value per grid point.
std::vector<double> outage_curve(const SystemConfig& config, OutageForm form);

// Ergodic capacity by adaptive quadrature of E[log2(1 + s Z^2)] with
// relative tolerance 1e-6; the integration range [0, mu + 10 sigma] in
// gain space leaves tail mass below 1e-20. Throws NumericError with the
// achieved error estimate if the quadrature cannot converge.
double ergodic_capacity_integral(const moments::CltMoments& m, double s);

// Deterministic-equivalent estimate log2(1 + s mu_Z^2).
double ergodic_capacity_bound(const moments::CltMoments& m, double s);

// |Q_1(a,b) - [Q(b-a) - Q(b+a)]|: the gap between the standard
// first-order Marcum function and the printed Q-pair identity, reported
// alongside sweep metadata.
double marcum_identity_residual(double a, double b);

// Capacity across the config grid.
std::vector<double> capacity_curve_integral(const SystemConfig& config);
std::vector<double> capacity_curve_bound(const SystemConfig& config);

}  // namespace duris::analytic
