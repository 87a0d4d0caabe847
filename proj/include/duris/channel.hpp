#pragma once

#include <complex>
#include <vector>

#include "duris/config.hpp"
#include "duris/rng.hpp"

namespace duris::channel {

using cplx = std::complex<double>;

// One draw of the two hop matrices. g holds the RIS1->RIS2 coefficients
// g_{k,i}, h the RIS2->receiver coefficients h_{p,i}; both are stored
// column-major by RIS2 element i, matching the canonical draw order
// (element i: all k, then all p). Entries are mutually independent.
struct ChannelRealization {
    int n = 0;     // elements per RIS
    int n_rx = 0;  // receive antennas
    std::vector<cplx> g;  // size n*n, g[k + i*n]
    std::vector<cplx> h;  // size n_rx*n, h[p + i*n_rx]

    const cplx& g_at(int k, int i) const { return g[k + i * static_cast<std::size_t>(n)]; }
    const cplx& h_at(int p, int i) const { return h[p + i * static_cast<std::size_t>(n_rx)]; }
};

// Unit-modulus reflection phases, one per RIS2 element, normalized to
// (-pi, pi].
struct PhaseProfile {
    std::vector<double> phases;
};

// One Rician coefficient sqrt(omega) * (sqrt(k/(k+1)) + sqrt(1/(k+1)) w),
// w ~ CN(0,1). The magnitude is Rician with total power omega.
cplx sample_rician(double k, double omega, rng::Xoshiro256pp& gen);

// Draws both hop matrices in the canonical element-major order.
ChannelRealization sample_realization(const SystemConfig& config, rng::Xoshiro256pp& gen);

// Dual-hop free-space factor zeta = (lambda_c / (4 pi d1 d2))^2.
double path_loss_zeta(const SystemConfig& config);

// Single-RIS baseline factor (lambda_c / (4 pi d2))^2, applied once.
double path_loss_single(const SystemConfig& config);

// Phases that align the column-aggregated cascade toward antenna m
// (0-based): phi_i = -arg((sum_k g_{k,i}) h_{m,i}).
PhaseProfile optimal_phases(const ChannelRealization& real, int m);

// Fully phase-compensated cascade gain toward antenna m:
//   sum_i (sum_k alpha_{k,i}) beta_{i,m},
// the evaluated form the analysis uses. Real and nonnegative.
double effective_gain_aligned(const ChannelRealization& real, int m);

// Double-sum gain under an explicit phase profile, evaluated in the
// compensated-magnitude model: each element contributes its magnitude
// cascade rotated by the residual misalignment relative to the optimal
// profile for antenna m. Equals effective_gain_aligned when the profile
// is optimal.
cplx effective_gain_dual(const ChannelRealization& real, const PhaseProfile& phases, int m);

// Diagnostic: the literal cascade sum_i e^{j phi_i} (sum_k g_{k,i}) h_{m,i}
// with no magnitude compensation. A single phase per element cannot cancel
// the k-dependent first-hop phases, so this sits strictly below the
// aligned gain for random channels.
cplx effective_gain_raw(const ChannelRealization& real, const PhaseProfile& phases, int m);

// Single-RIS coherent combine of one receive row: sum_i |h_i| under the
// optimal profile, reduced by residual misalignment otherwise.
cplx effective_gain_single(const std::vector<cplx>& h_row, const PhaseProfile& phases);

// Gains seen by every receive antenna when the profile steers antenna m:
// gain_p = sum_i (sum_k alpha_{k,i}) h_{p,i} conj(h_{m,i}) / |h_{m,i}|.
// Entry m is the aligned (real) gain; other antennas combine with the
// residual second-hop phase offsets.
std::vector<cplx> steered_gains(const ChannelRealization& real, int m);

// Instantaneous SNR toward antenna m. Dual topology applies
// zeta^zeta_exponent; the single-RIS baseline applies its factor once.
double instantaneous_snr(const SystemConfig& config, const ChannelRealization& real,
                         int m, double n0);

// SNR scale factor s such that gamma = s * gain^2 (zeta convention and
// topology folded in).
double snr_scale(const SystemConfig& config, double n0);

}  // namespace duris::channel
