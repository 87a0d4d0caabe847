#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "duris/rng.hpp"
#include "duris/specfun.hpp"
#include "oracles.hpp"

using namespace duris;

TEST_CASE("gaussian_q basics") {
    CHECK(specfun::gaussian_q(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // complementary symmetry at a specific point
    CHECK(specfun::gaussian_q(1.3) ==
          doctest::Approx(1.0 - specfun::gaussian_q(-1.3)).epsilon(1e-14));
    // frozen value derived from the quadrature oracle
    CHECK(specfun::gaussian_q(1.96) == doctest::Approx(0.024997895148220435).epsilon(1e-12));
    CHECK(std::abs(specfun::gaussian_q(1.96) - oracle::gaussian_q_quadrature(1.96)) < 1e-14);
    CHECK_THROWS_AS(specfun::gaussian_q(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(specfun::gaussian_q(INFINITY), std::domain_error);
}

TEST_CASE("gaussian_q symmetry property") {
    rng::Xoshiro256pp gen(42, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = -8.0 + 16.0 * gen.uniform01();
        CHECK(std::abs(specfun::gaussian_q(x) + specfun::gaussian_q(-x) - 1.0) < 1e-12);
    }
}

TEST_CASE("gaussian_q is strictly decreasing") {
    double prev = specfun::gaussian_q(-8.0);
    for (double x = -7.5; x <= 8.0; x += 0.5) {
        const double q = specfun::gaussian_q(x);
        CHECK(q < prev);
        prev = q;
    }
}

TEST_CASE("bessel_i at special points") {
    CHECK(specfun::bessel_i(0, 0.0) == 1.0);
    CHECK(specfun::bessel_i(1, 0.0) == 0.0);
    // frozen from the series oracle
    CHECK(specfun::bessel_i(0, 1.0) == doctest::Approx(1.2660658777520084).epsilon(1e-12));
    CHECK_THROWS_AS(specfun::bessel_i(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_i(2, 1.0), std::domain_error);
}

TEST_CASE("bessel_i against series oracle on [0, 30]") {
    rng::Xoshiro256pp gen(7, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = 30.0 * gen.uniform01();
        for (int order : {0, 1}) {
            const double ref = oracle::bessel_i_series(order, x);
            const double got = specfun::bessel_i(order, x);
            CHECK(std::abs(got - ref) <= 1e-10 * std::abs(ref));
        }
    }
}

TEST_CASE("bessel_i against integral representation") {
    for (double x : {0.3, 2.0, 9.0, 14.0, 16.0, 25.0}) {
        for (int order : {0, 1}) {
            const double ref = oracle::bessel_i_integral(order, x);
            CHECK(specfun::bessel_i(order, x) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_i branch seam agreement") {
    for (int order : {0, 1}) {
        const double below = specfun::bessel_i(order, 15.0);          // series branch
        const double above = specfun::bessel_i(order, 15.0000000001); // asymptotic branch
        CHECK(std::abs(above - below) <= 1e-10 * below);
    }
}

TEST_CASE("bessel ordering and scaled forms") {
    for (double x : {0.1, 1.0, 5.0, 14.0, 20.0, 120.0}) {
        CHECK(specfun::bessel_i0_scaled(x) > specfun::bessel_i1_scaled(x));
        CHECK(specfun::bessel_i1_scaled(x) > 0.0);
        if (x <= 30.0) {
            CHECK(specfun::bessel_i0_scaled(x) ==
                  doctest::Approx(std::exp(-x) * oracle::bessel_i_series(0, x)).epsilon(1e-10));
        }
        CHECK(specfun::log_bessel_i0(x) ==
              doctest::Approx(x + std::log(specfun::bessel_i0_scaled(x))).epsilon(1e-12));
    }
    // log form usable far beyond overflow
    CHECK(std::isfinite(specfun::log_bessel_i0(5e6)));
}

TEST_CASE("laguerre_half values") {
    CHECK(specfun::laguerre_half(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // frozen: e^{-1} (3 I0(1) + 2 I1(1)) from the series oracle
    CHECK(specfun::laguerre_half(2.0) == doctest::Approx(1.8130996534803385).epsilon(1e-12));
    const double composed =
        std::exp(-1.0) * (3.0 * oracle::bessel_i_series(0, 1.0) +
                          2.0 * oracle::bessel_i_series(1, 1.0));
    CHECK(specfun::laguerre_half(2.0) == doctest::Approx(composed).epsilon(1e-12));
    CHECK_THROWS_AS(specfun::laguerre_half(-0.5), std::domain_error);
}

TEST_CASE("laguerre_half matches the Rician mean quadrature at K = 10") {
    const double k = 10.0;
    const double mean = oracle::rician_mean_quadrature(k, 1.0);
    const double implied = mean / std::sqrt(M_PI / (4.0 * (k + 1.0)));
    CHECK(specfun::laguerre_half(k) == doctest::Approx(implied).epsilon(1e-8));
}

TEST_CASE("laguerre_half is nondecreasing on [0, 50]") {
    double prev = specfun::laguerre_half(0.0);
    for (double k = 0.05; k <= 50.0; k += 0.05) {
        const double v = specfun::laguerre_half(k);
        CHECK(v >= prev);
        CHECK(v >= 1.0);
        prev = v;
    }
}

TEST_CASE("marcum_q1 trivial and frozen values") {
    for (double a : {0.0, 0.7, 3.0, 25.0}) CHECK(specfun::marcum_q1(a, 0.0) == 1.0);
    CHECK(specfun::marcum_q1(0.0, 1.5) ==
          doctest::Approx(std::exp(-1.125)).epsilon(1e-13));
    // frozen from the Bessel-series oracle
    CHECK(specfun::marcum_q1(1.0, 1.0) == doctest::Approx(0.7328798037968203).epsilon(1e-10));
    CHECK_THROWS_AS(specfun::marcum_q1(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::marcum_q1(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::marcum_q1(std::nan(""), 1.0), std::domain_error);
}

TEST_CASE("marcum_q1 against the Bessel-series oracle") {
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double a = 0.25 * i;
            const double b = 0.25 * j;
            const double ref = oracle::marcum_q1_bessel_series(a, b);
            CHECK(std::abs(specfun::marcum_q1(a, b) - ref) < 1e-10);
        }
    }
}

TEST_CASE("marcum_q1 monotonicity") {
    rng::Xoshiro256pp gen(11, 0);
    for (int i = 0; i < 200; ++i) {
        const double a = 6.0 * gen.uniform01();
        const double b1 = 6.0 * gen.uniform01();
        const double b2 = b1 + 3.0 * gen.uniform01();
        CHECK(specfun::marcum_q1(a, b1) >= specfun::marcum_q1(a, b2));
        const double a2 = a + 3.0 * gen.uniform01();
        CHECK(specfun::marcum_q1(a2, b1) >= specfun::marcum_q1(a, b1));
    }
}

TEST_CASE("marcum_q1 large-argument consistency with gaussian_q") {
    // Plain Q(b-a) limit; the residual decays like phi(b-a)/(2a).
    for (double a : {300.0, 400.0, 500.0}) {
        for (double d : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            CHECK(std::abs(specfun::marcum_q1(a, a + d) - specfun::gaussian_q(d)) < 1e-3);
        }
    }
    // With the first-order correction the agreement extends down to a = 10.
    for (double a : {10.0, 30.0, 100.0}) {
        for (double d : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const double phi = std::exp(-0.5 * d * d) / std::sqrt(2.0 * M_PI);
            const double corrected = specfun::gaussian_q(d) + phi / (2.0 * a);
            CHECK(std::abs(specfun::marcum_q1(a, a + d) - corrected) < 1e-3);
        }
    }
}
