#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <utility>

#include "wkbound/errors.hpp"

namespace wkbound {

/// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs.
/// Converges to relative tolerance rel_tol (capped at max_iter splits).
template <std::invocable<double> F>
double bisect(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw solver_error("bisect: endpoints do not bracket a sign change");
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Root of a function with exactly one sign change on [lo_bound, hi_bound],
/// located by scanning a log-spaced grid and refined by bisection.
template <std::invocable<double> F>
double find_root_log_bracket(F&& f, double lo_bound = 1e-12, double hi_bound = 1e12,
                             double rel_tol = 1e-12) {
    const int kGridPoints = 241;  // 10 points per decade over 24 decades
    double x_prev = lo_bound;
    double f_prev = f(x_prev);
    if (f_prev == 0.0) return x_prev;
    const double step = std::pow(hi_bound / lo_bound, 1.0 / (kGridPoints - 1));
    double x = x_prev;
    for (int i = 1; i < kGridPoints; ++i) {
        x *= step;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) != (f_prev > 0.0))
            return bisect(f, x_prev, x, rel_tol);
        x_prev = x;
        f_prev = fx;
    }
    throw solver_error("find_root_log_bracket: no sign change in [1e-12, 1e12]");
}

/// Golden-section minimum of a unimodal function given a bracket
/// a < b < c with f(b) < f(a), f(b) < f(c). Relative tolerance in x.
template <std::invocable<double> F>
double golden_min(F&& f, double a, double b, double c, double rel_tol = 1e-10) {
    constexpr double kInvPhi = 0.6180339887498948482;
    double x0 = a, x3 = c, x1, x2;
    if (c - b > b - a) {
        x1 = b;
        x2 = b + (1.0 - kInvPhi) * (c - b);
    } else {
        x2 = b;
        x1 = b - (1.0 - kInvPhi) * (b - a);
    }
    double f1 = f(x1);
    double f2 = f(x2);
    while (x3 - x0 > rel_tol * (std::abs(x1) + std::abs(x2))) {
        if (f2 < f1) {
            x0 = x1;
            x1 = x2;
            f1 = f2;
            x2 = kInvPhi * x2 + (1.0 - kInvPhi) * x3;
            f2 = f(x2);
        } else {
            x3 = x2;
            x2 = x1;
            f2 = f1;
            x1 = kInvPhi * x1 + (1.0 - kInvPhi) * x0;
            f1 = f(x1);
        }
    }
    return f1 < f2 ? x1 : x2;
}

/// Expands a triple geometrically from x = seed until it brackets an
/// interior minimum of f. Returns (a, b, c) with f(b) < f(a), f(b) < f(c).
template <std::invocable<double> F>
std::tuple<double, double, double> expand_min_bracket(F&& f, double seed = 1.0,
                                                      int max_expand = 200) {
    double a = 0.5 * seed, b = seed, c = 2.0 * seed;
    double fa = f(a), fb = f(b), fc = f(c);
    for (int it = 0; it < max_expand; ++it) {
        if (fb < fa && fb < fc) return {a, b, c};
        if (fa <= fb) {  // still descending toward 0: slide down
            c = b;
            fc = fb;
            b = a;
            fb = fa;
            a *= 0.5;
            fa = f(a);
        } else {  // descending toward infinity: slide up
            a = b;
            fa = fb;
            b = c;
            fb = fc;
            c *= 2.0;
            fc = f(c);
        }
    }
    throw solver_error("expand_min_bracket: no interior minimum found");
}

}  // namespace wkbound
