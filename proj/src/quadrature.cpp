#include "duris/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace duris::quad {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point
// Gauss rule (positive half; symmetric).
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss weights attach to every second Kronrod node (indices 1,3,5,7).
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& other) const { return error < other.error; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b,
                  int& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fsum[8];
    for (int i = 0; i < 7; ++i) {
        fsum[i] = f(center - half * kNodes[i]) + f(center + half * kNodes[i]);
    }
    fsum[7] = f(center);
    evals += 15;

    double kronrod = 0.0;
    for (int i = 0; i < 8; ++i) kronrod += kKronrodW[i] * fsum[i];
    // Gauss nodes sit at Kronrod indices 1, 3, 5, 7.
    double gauss = 0.0;
    for (int i = 0; i < 4; ++i) gauss += kGaussW[i] * fsum[2 * i + 1];

    const double value = kronrod * half;
    const double err = std::abs((kronrod - gauss) * half);
    return {a, b, value, std::max(err, std::abs(value) * 1e-16)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_intervals) {
    QuadResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    int evals = 0;
    std::priority_queue<Interval> work;
    work.push(evaluate(f, a, b, evals));
    double total = work.top().value;
    double total_err = work.top().error;

    int intervals = 1;
    while (intervals < max_intervals) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_err <= tol) break;
        Interval worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Interval left = evaluate(f, worst.a, mid, evals);
        Interval right = evaluate(f, mid, worst.b, evals);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++intervals;
    }

    result.value = total;
    result.error_estimate = total_err;
    result.evaluations = evals;
    result.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
    return result;
}

}  // namespace duris::quad
