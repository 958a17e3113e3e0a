#pragma once

#include <cmath>
#include <numbers>

#include "wkbound/errors.hpp"
#include "wkbound/numerics.hpp"

namespace wkbound {

namespace detail {

inline constexpr long double kAi0 = 0.35502805388781723926L;   // Ai(0) = 3^(-2/3)/Gamma(2/3)
inline constexpr long double kAiP0 = 0.25881940379280679840L;  // -Ai'(0) = 3^(-1/3)/Gamma(1/3)

/// Maclaurin solution of y'' = x y, accumulated in long double: the two
/// auxiliary series y1 (even-led) and y2 (odd-led) with term recurrences
/// t_{k+1} = t_k x^3 / ((3k+2)(3k+3)) and u_{k+1} = u_k x^3 / ((3k+3)(3k+4)).
inline double airy_ai_series(double x) {
    const long double z = x;
    const long double z3 = z * z * z;
    long double t = 1.0L, y1 = 1.0L;
    long double s = z, y2 = z;
    for (int k = 0; k < 300; ++k) {
        t *= z3 / ((3 * k + 2) * (3 * k + 3));
        y1 += t;
        s *= z3 / ((3 * k + 3) * (3 * k + 4));
        y2 += s;
        if (std::abs(t) < 1e-26L * (std::abs(y1) + 1.0L) &&
            std::abs(s) < 1e-26L * (std::abs(y2) + 1.0L))
            break;
    }
    return static_cast<double>(kAi0 * y1 - kAiP0 * y2);
}

/// Next coefficient of the asymptotic expansions:
/// c_0 = 1, c_k = c_{k-1} (3k - 1/2)(3k - 3/2)(3k - 5/2) / (54 k (k - 1/2)).
inline double airy_asym_coeff_step(int k, double prev) {
    return prev * (3.0 * k - 0.5) * (3.0 * k - 1.5) * (3.0 * k - 2.5) /
           (54.0 * k * (k - 0.5));
}

/// Decaying branch, x >> 0: Ai(x) = e^(-zeta) / (2 sqrt(pi) x^(1/4)) *
/// sum_k (-1)^k c_k zeta^(-k), zeta = (2/3) x^(3/2). Truncated at the
/// smallest term.
inline double airy_ai_asym_pos(double x) {
    const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    double sum = 1.0;
    double c = 1.0;
    double term_prev = 1.0;
    double sign = -1.0;
    for (int k = 1; k <= 40; ++k) {
        c = airy_asym_coeff_step(k, c);
        const double term = c * std::pow(zeta, -k);
        if (term >= term_prev) break;  // past the optimal truncation point
        sum += sign * term;
        if (term < 1e-18 * std::abs(sum)) break;
        term_prev = term;
        sign = -sign;
    }
    return std::exp(-zeta) * sum / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25));
}

/// Oscillatory branch, x << 0 (t = -x): Ai(-t) = (sin(zeta + pi/4) P -
/// cos(zeta + pi/4) Q) / (sqrt(pi) t^(1/4)) with P, Q the even/odd
/// alternating sums of c_k zeta^(-k).
inline double airy_ai_asym_neg(double x) {
    const double t = -x;
    const double zeta = 2.0 / 3.0 * std::pow(t, 1.5);
    double p_sum = 1.0, q_sum = 0.0;
    double c = 1.0;
    double term_prev = 1.0;
    for (int j = 1; j <= 40; ++j) {
        c = airy_asym_coeff_step(j, c);
        const double term = c * std::pow(zeta, -j);
        if (term >= term_prev) break;
        const int pair = j / 2;  // index k in the (-1)^k prefactor
        const double signed_term = (pair % 2 == 0 ? term : -term);
        if (j % 2 == 0)
            p_sum += signed_term;
        else
            q_sum += signed_term;
        term_prev = term;
    }
    const double phase = zeta + 0.25 * std::numbers::pi;
    return (std::sin(phase) * p_sum - std::cos(phase) * q_sum) /
           (std::sqrt(std::numbers::pi) * std::pow(t, 0.25));
}

}  // namespace detail

/// Airy function Ai on [-20, 20]: Maclaurin series on [-8, 5], asymptotic
/// expansions beyond. The split is asymmetric because on the positive side
/// the series cancels two exponentially growing sums against each other,
/// while on the negative side it merely oscillates. Absolute accuracy is
/// better than 1e-10 on [-10, 5]; the decaying tail keeps 1e-10 relative.
inline double airy_ai(double x) {
    if (!(std::abs(x) <= 20.0))
        throw range_error("airy_ai: |x| <= 20 is the implemented range");
    if (x > 5.0) return detail::airy_ai_asym_pos(x);
    if (x >= -8.0) return detail::airy_ai_series(x);
    return detail::airy_ai_asym_neg(x);
}

/// k-th negative zero of Ai (k = 1 is the first), by bisection between
/// brackets around the McMahon-style estimate -(3 pi (4k-1)/8)^(2/3).
inline double airy_ai_zero(int k) {
    if (k < 1 || k > 18)
        throw range_error("airy_ai_zero: zero index must be in [1, 18]");
    const double t = 3.0 * std::numbers::pi * (4.0 * k - 1.0) / 8.0;
    const double est = -std::pow(t, 2.0 / 3.0);
    return bisect([](double x) { return airy_ai(x); }, est - 0.3, est + 0.3, 1e-15, 120);
}

}  // namespace wkbound
