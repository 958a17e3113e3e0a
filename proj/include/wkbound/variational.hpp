#pragma once

#include <cmath>
#include <string>

#include "wkbound/potential.hpp"
#include "wkbound/quadrature.hpp"
#include "wkbound/units.hpp"

namespace wkbound {

/// One-parameter trial families for the hard-wall half line. Both vanish at
/// the wall and are normalizable for every a > 0.
enum class TrialKind {
    ExpLinear,  // psi_a(x) = x exp(-a x)
    ExpGauss,   // psi_a(x) = x exp(-a x^2)
};

inline double trial_psi(TrialKind kind, double a, double x) {
    return kind == TrialKind::ExpLinear ? x * std::exp(-a * x) : x * std::exp(-a * x * x);
}

/// Analytic derivative; trial derivatives are never differenced.
inline double trial_dpsi(TrialKind kind, double a, double x) {
    if (kind == TrialKind::ExpLinear) return (1.0 - a * x) * std::exp(-a * x);
    return (1.0 - 2.0 * a * x * x) * std::exp(-a * x * x);
}

/// Variational upper bound on the ground energy with the optimized trial.
struct UpperBound {
    double energy = 0.0;
    double a_star = 0.0;
    TrialKind trial = TrialKind::ExpLinear;
    double quadrature_error_estimate = 0.0;
};

namespace detail {

struct QuotientEval {
    double value = 0.0;
    double error_estimate = 0.0;
};

template <Potential P>
QuotientEval rayleigh_quotient_eval(const P& p, TrialKind kind, double a, const Units& u) {
    if (!(a > 0.0)) throw domain_error("rayleigh_quotient: trial parameter a must be positive");
    const double kin = 0.5 * u.hbar * u.hbar / u.mass;
    const auto numerator = integrate_half_line([&](double x) {
        const double dpsi = trial_dpsi(kind, a, x);
        const double psi = trial_psi(kind, a, x);
        const double v = x > 0.0 ? p.value(x) : 0.0;
        return kin * dpsi * dpsi + v * psi * psi;
    });
    const auto norm = integrate_half_line([&](double x) {
        const double psi = trial_psi(kind, a, x);
        return psi * psi;
    });
    QuotientEval q;
    q.value = numerator.value / norm.value;
    q.error_estimate = std::abs(q.value) * (numerator.error_estimate / numerator.value +
                                            norm.error_estimate / norm.value);
    return q;
}

}  // namespace detail

/// <psi_a|H|psi_a> / <psi_a|psi_a> by adaptive quadrature on the truncated
/// half line.
template <Potential P>
double rayleigh_quotient(const P& p, TrialKind kind, double a, const Units& u = {}) {
    return detail::rayleigh_quotient_eval(p, kind, a, u).value;
}

/// Golden-section minimum of the Rayleigh quotient over a. The bracket is
/// grown geometrically from a = 1 until it holds an interior minimum.
template <Potential P>
UpperBound minimize_upper_bound(const P& p, TrialKind kind, const Units& u = {}) {
    const auto quotient = [&](double a) { return rayleigh_quotient(p, kind, a, u); };
    const auto [lo, mid, hi] = expand_min_bracket(quotient, 1.0);
    UpperBound ub;
    ub.trial = kind;
    ub.a_star = golden_min(quotient, lo, mid, hi, 1e-10);
    const auto q = detail::rayleigh_quotient_eval(p, kind, ub.a_star, u);
    ub.energy = q.value;
    ub.quadrature_error_estimate = q.error_estimate;
    return ub;
}

inline const char* to_string(TrialKind kind) {
    switch (kind) {
        case TrialKind::ExpLinear: return "ExpLinear";
        case TrialKind::ExpGauss: return "ExpGauss";
    }
    return "?";
}

}  // namespace wkbound
