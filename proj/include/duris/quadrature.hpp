#pragma once

#include <functional>

namespace duris::quad {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod (15/7) integration of f over [a, b].
// Subdivides the interval with the largest error estimate until
// |error| <= max(abs_tol, rel_tol * |value|) or the interval budget is
// exhausted; the achieved estimate is reported either way.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_intervals = 4000);

}  // namespace duris::quad
