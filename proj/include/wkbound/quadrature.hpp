#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "wkbound/errors.hpp"

namespace wkbound {

/// Integral value plus the last-refinement error estimate.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Integrates a smooth, exponentially decaying integrand over [0, inf).
///
/// The domain is truncated where the integrand falls below 1e-16 of its
/// peak (peak located on a geometric scan), then composite Simpson sums are
/// refined by interval doubling until two successive estimates agree to
/// rel_tol. Throws quadrature_error if the refinement cap is hit.
template <std::invocable<double> F>
QuadratureResult integrate_half_line(F&& f, double rel_tol = 1e-12) {
    // Peak scan over x = 2^j.
    double peak = std::abs(f(0.0));
    double x_peak = 0.0;
    for (int j = -40; j <= 40; ++j) {
        const double x = std::ldexp(1.0, j);
        const double fx = std::abs(f(x));
        if (fx > peak) {
            peak = fx;
            x_peak = x;
        }
    }
    if (peak == 0.0) return {0.0, 0.0};

    double x_hi = std::max(x_peak, 1.0);
    int guard = 0;
    while (std::abs(f(x_hi)) > 1e-16 * peak) {
        x_hi *= 2.0;
        if (++guard > 60) throw quadrature_error("integrate_half_line: integrand does not decay");
    }

    // Trapezoid refinement with Simpson extraction.
    int n = 64;
    const double a = 0.0, b = x_hi;
    double h = (b - a) / n;
    double trap = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) trap += f(a + i * h);
    trap *= h;
    double simpson_prev = 0.0;
    bool have_prev = false;
    for (int level = 0; level < 18; ++level) {
        double mid_sum = 0.0;
        for (int i = 0; i < n; ++i) mid_sum += f(a + (i + 0.5) * h);
        const double trap_fine = 0.5 * trap + 0.5 * h * mid_sum;
        const double simpson = (4.0 * trap_fine - trap) / 3.0;
        n *= 2;
        h *= 0.5;
        trap = trap_fine;
        if (have_prev) {
            const double diff = std::abs(simpson - simpson_prev);
            if (diff <= rel_tol * std::abs(simpson))
                return {simpson, diff / 15.0};
        }
        simpson_prev = simpson;
        have_prev = true;
    }
    throw quadrature_error("integrate_half_line: no convergence after " + std::to_string(n) +
                           " intervals on [0, " + std::to_string(x_hi) + "]");
}

}  // namespace wkbound
