#include "duris/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace duris::specfun {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kTwoPi = 6.2831853071795864769;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(what) + ": non-finite argument");
    }
}

// Power-series sum of I_v(x) for v in {0,1}, x <= ~18. All terms are
// positive, so there is no cancellation; stops when a term no longer
// moves the sum.
double bessel_series(int order, double x) {
    const double q = 0.25 * x * x;
    double term = (order == 0) ? 1.0 : 0.5 * x;
    double sum = term;
    for (int m = 1; m < 220; ++m) {
        term *= q / (static_cast<double>(m) * (m + order));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Asymptotic expansion of e^{-x} I_v(x) sqrt(2 pi x) for large x.
// Truncated at the smallest term.
double bessel_asymptotic_factor(int order, double x) {
    const double mu = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (odd * odd - mu) / (8.0 * x * k);  // alternating sign folded in
        if (std::abs(term) > prev) break;          // divergence onset
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_scaled(int order, double x) {
    if (x <= 15.0) {
        return std::exp(-x) * bessel_series(order, x);
    }
    return bessel_asymptotic_factor(order, x) / std::sqrt(kTwoPi * x);
}

void check_bessel_domain(int order, double x) {
    if (order != 0 && order != 1) {
        throw std::domain_error("bessel_i: order must be 0 or 1");
    }
    require_finite(x, "bessel_i");
    if (x < 0.0) {
        throw std::domain_error("bessel_i: negative argument");
    }
}

}  // namespace

double gaussian_q(double x) {
    require_finite(x, "gaussian_q");
    return 0.5 * std::erfc(x / kSqrt2);
}

double normal_cdf(double x) {
    require_finite(x, "normal_cdf");
    return 0.5 * std::erfc(-x / kSqrt2);
}

double bessel_i(int order, double x) {
    check_bessel_domain(order, x);
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x <= 15.0) return bessel_series(order, x);
    return std::exp(x) * bessel_scaled(order, x);
}

double bessel_i0_scaled(double x) {
    check_bessel_domain(0, x);
    if (x == 0.0) return 1.0;
    return bessel_scaled(0, x);
}

double bessel_i1_scaled(double x) {
    check_bessel_domain(1, x);
    if (x == 0.0) return 0.0;
    return bessel_scaled(1, x);
}

double log_bessel_i0(double x) {
    check_bessel_domain(0, x);
    if (x == 0.0) return 0.0;
    return x + std::log(bessel_scaled(0, x));
}

double laguerre_half(double k) {
    require_finite(k, "laguerre_half");
    if (k < 0.0) {
        throw std::domain_error("laguerre_half: negative K-factor");
    }
    const double half = 0.5 * k;
    return (1.0 + k) * bessel_i0_scaled(half) + k * bessel_i1_scaled(half);
}

double marcum_q1(double a, double b) {
    require_finite(a, "marcum_q1");
    require_finite(b, "marcum_q1");
    if (a < 0.0 || b < 0.0) {
        throw std::domain_error("marcum_q1: negative argument");
    }
    if (b == 0.0) return 1.0;

    const double lambda = 0.5 * a * a;  // Poisson mixture mean
    const double y = 0.5 * b * b;       // chi-square half-argument
    if (lambda == 0.0) return std::exp(-y);

    // Q_1(a,b) = sum_k p_k(lambda) * G_k(y), where p_k is the Poisson pmf
    // and G_k(y) = P(chi^2_{2k+2} > 2y) = P(Poisson(y) <= k).
    //
    // Both sequences are evaluated from the index of the dominant Poisson
    // term outward, with lgamma-seeded anchors, so the sum stays stable
    // for noncentralities far beyond exp-underflow range.
    const auto poisson_pmf = [](double mean, double k_idx) {
        const double lp = k_idx * std::log(mean) - mean - std::lgamma(k_idx + 1.0);
        return std::exp(lp);
    };

    const long k0 = static_cast<long>(std::floor(lambda));
    const double p0 = poisson_pmf(lambda, static_cast<double>(k0));

    // Anchor G_{k0} = P(Poisson(y) <= k0), summed from whichever side of
    // the mode is shorter.
    double g0;
    {
        const long j_mode = static_cast<long>(std::floor(y));
        if (k0 >= j_mode) {
            // upper tail is short: G = 1 - P(Poisson(y) > k0)
            double t = poisson_pmf(y, static_cast<double>(k0 + 1));
            double tail = 0.0;
            for (long j = k0 + 1; j < k0 + 1 + 4000; ++j) {
                tail += t;
                t *= y / static_cast<double>(j + 1);
                if (t < 1e-18 * (tail + 1e-300)) break;
            }
            g0 = 1.0 - tail;
        } else {
            // lower tail is short: sum pmf downward from k0
            double t = poisson_pmf(y, static_cast<double>(k0));
            double cdf = 0.0;
            for (long j = k0; j >= 0; --j) {
                cdf += t;
                t *= static_cast<double>(j) / y;
                if (t < 1e-18 * (cdf + 1e-300)) break;
            }
            g0 = cdf;
        }
    }

    // t_k = Poisson(y) pmf at k, needed to step G up and down.
    double sum = p0 * g0;
    double mass = p0;

    // upward sweep
    {
        double p = p0;
        double g = g0;
        double t = poisson_pmf(y, static_cast<double>(k0 + 1));
        for (long k = k0 + 1; k < k0 + 2000000; ++k) {
            p *= lambda / static_cast<double>(k);
            g += t;
            if (g > 1.0) g = 1.0;
            sum += p * g;
            mass += p;
            t *= y / static_cast<double>(k + 1);
            if (1.0 - mass < 1e-14 || p < 1e-18 * p0) break;
        }
    }
    // downward sweep
    if (k0 > 0) {
        double p = p0;
        double g = g0;
        double t = poisson_pmf(y, static_cast<double>(k0));
        for (long k = k0 - 1; k >= 0; --k) {
            p *= static_cast<double>(k + 1) / lambda;
            g -= t;  // t is the pmf at k+1 here
            if (g < 0.0) g = 0.0;
            sum += p * g;
            mass += p;
            t *= static_cast<double>(k + 1) / y;
            if (1.0 - mass < 1e-14 || p < 1e-18 * p0) break;
        }
    }

    if (sum < 0.0) return 0.0;
    if (sum > 1.0) return 1.0;
    return sum;
}

}  // namespace duris::specfun
