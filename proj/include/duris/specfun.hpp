#pragma once

namespace duris::specfun {

// Accuracy contract attached to a kernel function: at least one of the two
// tolerances is positive and both are finite.
struct Accuracy {
    double abs_tol = 0.0;
    double rel_tol = 0.0;
};

// Gaussian tail probability Q(x) = P(X > x) for standard normal X.
// Computed through erfc; absolute error below 1e-14 on [-8, 8] and
// relative error near machine precision in the deep tail.
// Throws std::domain_error for non-finite input.
double gaussian_q(double x);

// Standard normal CDF, Phi(x) = 1 - Q(x), evaluated through the erfc of
// the opposite tail so that small probabilities keep full precision.
double normal_cdf(double x);

// Modified Bessel function of the first kind, orders 0 and 1 only.
// Power series for x <= 15, asymptotic expansion beyond; the crossover
// keeps both branches within 1e-10 of each other at the seam.
// Domain: x >= 0, order in {0, 1}; violations throw std::domain_error.
double bessel_i(int order, double x);

// Exponentially scaled variants e^{-x} I_0(x), e^{-x} I_1(x); stable for
// arbitrarily large x.
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);

// log I_0(x) for x >= 0, usable where I_0 itself would overflow.
double log_bessel_i0(double x);

// Generalized Laguerre polynomial L_{1/2} evaluated at -k for k >= 0:
//   L_{1/2}(-k) = exp(-k/2) [ (1+k) I_0(k/2) + k I_1(k/2) ].
// Nondecreasing in k, value >= 1. Evaluated through the scaled Bessel
// functions so large k does not overflow.
double laguerre_half(double k);

// First-order Marcum Q function Q_1(a, b): tail probability of a
// noncentral chi-square with 2 degrees of freedom and noncentrality a^2
// evaluated at b^2. Canonical Poisson-mixture series with the summation
// centered on the dominant term; truncation error below 1e-12.
double marcum_q1(double a, double b);

// Declared accuracies for the kernels above.
inline constexpr Accuracy kGaussianQAccuracy{1e-14, 0.0};
inline constexpr Accuracy kBesselAccuracy{0.0, 1e-10};
inline constexpr Accuracy kMarcumAccuracy{1e-12, 0.0};

}  // namespace duris::specfun
