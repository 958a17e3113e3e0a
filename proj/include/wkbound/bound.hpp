#pragma once

#include <cmath>
#include <string>

#include "wkbound/region_map.hpp"

namespace wkbound {

enum class SolveMethod { RoughRoot, ExactRoot, ClosedForm };

/// Lower-bound record. energy = V(x0_min) always. certified is true only on
/// the power-law family with 1 <= n <= 5/2 (case 1 or the linear-degenerate
/// n = 1), with the uncertainty condition energy <= hbar^2/(8 m x0^2)
/// verified numerically. For n > 5/2 the case-2 threshold energy is
/// reported but never certified. heuristic marks values computed for
/// potentials outside the family.
struct LowerBound {
    double x0_min = 0.0;
    double energy = 0.0;
    CaseLabel case_label = CaseLabel::Case1;
    bool certified = false;
    bool condition_37_holds = false;
    SolveMethod method = SolveMethod::ClosedForm;
    bool heuristic = false;
    std::string reason;  // set when certification is refused
    Units units;         // unit system the bound was computed in
};

/// Smallest turning point at which the validity region survives, in the
/// roughest approximation: the root of x^3 V'(x) = hbar^2 / 8m.
template <Potential P>
double solve_x0_rough(const P& p, const Units& u = {}) {
    const double rhs = u.hbar * u.hbar / (8.0 * u.mass);
    return find_root_log_bracket([&](double x) { return x * x * x * p.d1(x) - rhs; });
}

/// Power-law closed form x0 = (hbar^2 / 8 beta m n)^(1/(n+2)), cross-checked
/// against the generic root-finder.
inline double solve_x0_rough(const PowerLawPotential& p, const Units& u = {}) {
    const double x0 = std::pow(u.hbar * u.hbar / (8.0 * p.beta() * u.mass * p.n()),
                               1.0 / (p.n() + 2.0));
    const double rhs = u.hbar * u.hbar / (8.0 * u.mass);
    const double x0_root =
        find_root_log_bracket([&](double x) { return x * x * x * p.d1(x) - rhs; });
    if (std::abs(x0_root - x0) > 1e-9 * x0)
        throw solver_error("solve_x0_rough: closed form and root-finder disagree");
    return x0;
}

/// Same threshold without the rough simplification: root of
/// (alpha x^3 / 2) V''(x) [1 - 4x/(3 alpha)]^(-3) = hbar^2 / 8m.
/// Reported as a diagnostic; the headline bound uses the rough root.
template <Potential P>
double solve_x0_exact(const P& p, const Units& u = {}) {
    const double rhs = u.hbar * u.hbar / (8.0 * u.mass);
    return find_root_log_bracket([&](double x) {
        const double vpp = p.d2(x);
        if (vpp == 0.0)
            throw degenerate_error("solve_x0_exact: V'' vanishes on the search domain");
        const double alpha = alpha_length(p, x);
        const double bracket = 1.0 - 4.0 * x / (3.0 * alpha);
        if (bracket <= 0.0)
            throw not_applicable_error(
                "solve_x0_exact: bracket factor 1 - 4x0/(3 alpha) is not positive");
        return 0.5 * alpha * x * x * x * vpp / (bracket * bracket * bracket) - rhs;
    });
}

inline double solve_x0_exact(const PowerLawPotential& p, const Units& u = {}) {
    if (p.n() == 1.0)
        throw degenerate_error("solve_x0_exact: V'' = 0 for n = 1 (alpha is infinite)");
    if (p.n() >= 2.5)
        throw not_applicable_error(
            "solve_x0_exact: bracket factor 1 - 2(n-1)/3 <= 0 for n >= 5/2");
    return solve_x0_exact<PowerLawPotential>(p, u);
}

/// E_cl <= hbar^2 / (8 m x0^2), the condition under which the threshold
/// energy is a ground-state lower bound. The n = 1 family sits exactly on
/// the boundary, so the comparison carries a 1e-12 relative slack to keep
/// rounding from flipping a true equality.
inline bool condition_37_check(double e_cl, double x0, const Units& u = {}) {
    if (!(e_cl > 0.0) || !(x0 > 0.0))
        throw domain_error("condition_37_check: E_cl and x0 must be positive");
    const double bound = u.hbar * u.hbar / (8.0 * u.mass * x0 * x0);
    return e_cl <= bound * (1.0 + 1e-12);
}

/// (3/2)^3 <= n/(n-1)^3, the inequality that would be needed to certify the
/// case-2 threshold. False for every n > 5/2.
inline bool case2_certification_inequality(double n) {
    return 3.375 <= n / ((n - 1.0) * (n - 1.0) * (n - 1.0));
}

/// Lower-bound engine for the power-law family.
///
/// n <= 5/2: x0 from the rough closed form, E_cl = V(x0) =
/// hbar^2/(8 m n x0^2), certified when the uncertainty condition holds.
/// n > 5/2: the case-2 threshold x0 (at which the third validity region
/// appears), E_cl = (3(n-1)/2)^3 hbar^2/(8 m n x0^2); refused, since the
/// certification inequality cannot hold there.
inline LowerBound lower_bound_energy(const PowerLawPotential& p, const Units& u = {}) {
    LowerBound lb;
    lb.units = u;
    lb.method = SolveMethod::ClosedForm;
    const double n = p.n();
    if (n <= 2.5) {
        lb.x0_min = solve_x0_rough(p, u);
        lb.energy = p.value(lb.x0_min);
        lb.case_label = n == 1.0 ? CaseLabel::LinearDegenerate : CaseLabel::Case1;
        lb.condition_37_holds = condition_37_check(lb.energy, lb.x0_min, u);
        lb.certified = lb.condition_37_holds;
        if (!lb.certified) lb.reason = "uncertainty condition fails";
    } else {
        const double factor = std::pow(1.5 * (n - 1.0), 3.0 / (n + 2.0));
        lb.x0_min = solve_x0_rough(p, u) * factor;
        lb.energy = p.value(lb.x0_min);
        lb.case_label = CaseLabel::Case2;
        lb.condition_37_holds = condition_37_check(lb.energy, lb.x0_min, u);
        lb.certified = false;
        lb.reason =
            "threshold energy only: the certification inequality (3/2)^3 <= n/(n-1)^3 "
            "has no solution for n > 5/2";
    }
    return lb;
}

/// Heuristic variant for potentials outside the power-law family: the
/// geometry is analyzed and the value reported, but never certified.
template <Potential P>
LowerBound lower_bound_energy(const P& p, const Units& u = {}) {
    LowerBound lb;
    lb.units = u;
    lb.method = SolveMethod::RoughRoot;
    lb.heuristic = true;
    lb.x0_min = solve_x0_rough(p, u);
    lb.energy = p.value(lb.x0_min);
    const auto ta = analyze_turning_point(p, lb.x0_min, u);
    lb.case_label = ta.case_label == CaseLabel::SlopeDegenerate ? CaseLabel::Case1
                                                                : ta.case_label;
    lb.condition_37_holds = condition_37_check(lb.energy, lb.x0_min, u);
    lb.certified = false;
    lb.reason = "certification is restricted to the power-law family";
    return lb;
}

inline const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::RoughRoot: return "RoughRoot";
        case SolveMethod::ExactRoot: return "ExactRoot";
        case SolveMethod::ClosedForm: return "ClosedForm";
    }
    return "?";
}

}  // namespace wkbound
