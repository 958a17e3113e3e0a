#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "wkbound/potential.hpp"
#include "wkbound/units.hpp"

namespace wkbound {

enum class CaseLabel { Case1, Case2, LinearDegenerate, SlopeDegenerate };

inline constexpr double kSlopeDegenerateTol = 1e-9;

/// Everything the validity analysis needs at one classical turning point.
///
/// alpha is the radius of the linear Taylor approximation of V at x0,
/// alpha = 2|V'/V''|; it is the +infinity sentinel when V''(x0) = 0 and then
/// gamma is absent. ratio = x0/alpha (0 for the degenerate case).
struct TurningAnalysis {
    double x0 = 0.0;
    double energy = 0.0;  // V(x0)
    double alpha = 0.0;
    double ratio = 0.0;
    std::optional<double> gamma;
    CaseLabel case_label = CaseLabel::Case1;
};

/// Length parameter alpha = 2|V'(x0)/V''(x0)|; +infinity when V''(x0) = 0.
template <Potential P>
double alpha_length(const P& p, double x0) {
    if (!(x0 > 0.0)) throw domain_error("alpha_length: x0 must be positive");
    const double vp = p.d1(x0);
    if (!(vp > 0.0))
        throw domain_error("alpha_length: V'(x0) must be positive (monotonic potential)");
    const double vpp = p.d2(x0);
    if (vpp == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::abs(vp / vpp);
}

/// Power-law closed form alpha = 2 x0 / (n - 1); keeps x0/alpha = (n-1)/2
/// exact, which the case split at 3/4 relies on.
inline double alpha_length(const PowerLawPotential& p, double x0) {
    if (!(x0 > 0.0)) throw domain_error("alpha_length: x0 must be positive");
    if (p.n() == 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * x0 / (p.n() - 1.0);
}

/// gamma = { hbar^2 / (4 m alpha^4 V''(x0)) }^(1/3), the dimensionless
/// strength of the breakdown inequality.
template <Potential P>
double gamma_param(const P& p, double x0, const Units& u = {}) {
    if (!(x0 > 0.0)) throw domain_error("gamma_param: x0 must be positive");
    const double vpp = p.d2(x0);
    if (vpp == 0.0)
        throw degenerate_error("gamma_param: V''(x0) = 0, use the linear-degenerate handling");
    if (vpp < 0.0) throw domain_error("gamma_param: V''(x0) < 0 is outside the family");
    const double alpha = alpha_length(p, x0);
    return std::cbrt(u.hbar * u.hbar / (4.0 * u.mass * alpha * alpha * alpha * alpha * vpp));
}

template <Potential P>
TurningAnalysis analyze_turning_point(const P& p, double x0, const Units& u = {}) {
    TurningAnalysis ta;
    ta.x0 = x0;
    ta.energy = p.value(x0);
    ta.alpha = alpha_length(p, x0);
    if (std::isinf(ta.alpha)) {
        ta.ratio = 0.0;
        ta.case_label = CaseLabel::LinearDegenerate;
        return ta;
    }
    if constexpr (std::is_same_v<P, PowerLawPotential>)
        ta.ratio = 0.5 * (p.n() - 1.0);  // exact, independent of beta and x0
    else
        ta.ratio = x0 / ta.alpha;
    ta.gamma = gamma_param(p, x0, u);
    if (std::abs(4.0 * (*ta.gamma) / 3.0 - 1.0) < kSlopeDegenerateTol)
        ta.case_label = CaseLabel::SlopeDegenerate;
    else if (ta.ratio <= 0.75)
        ta.case_label = CaseLabel::Case1;
    else
        ta.case_label = CaseLabel::Case2;
    return ta;
}

/// Reduced de Broglie wavelength at x, plus the scale over which the
/// potential changes, so callers can test lambda_bar against it.
struct WavelengthInfo {
    double lambda_bar = 0.0;       // hbar / sqrt(2m[E - V(x)])
    double potential_scale = 0.0;  // 2|E - V(x)| / |dV/dx|
};

/// Valid for 0 <= x with V(x) < E; x = 0 uses the wall limit V -> 0.
template <Potential P>
WavelengthInfo local_wavelength(const P& p, double energy, double x, const Units& u = {}) {
    if (x < 0.0) throw domain_error("local_wavelength: x < 0 is inside the wall");
    const double x_eff = std::max(x, std::numeric_limits<double>::min());
    const double v = x > 0.0 ? p.value(x) : 0.0;
    if (!(v < energy))
        throw domain_error("local_wavelength: point is classically forbidden (V(x) >= E)");
    WavelengthInfo info;
    info.lambda_bar = u.hbar / std::sqrt(2.0 * u.mass * (energy - v));
    info.potential_scale = 2.0 * (energy - v) / std::abs(p.d1(x_eff));
    return info;
}

namespace detail {

/// Boundary distance x0 - x at which the wavelength condition saturates when
/// V'' = 0 (linear potential): (s^2 hbar^2 / 8 m V'(x0))^(1/3).
template <Potential P>
double linear_degenerate_boundary(const P& p, double x0, const Units& u, double strictness) {
    const double s2 = strictness * strictness;
    return std::cbrt(s2 * u.hbar * u.hbar / (8.0 * u.mass * p.d1(x0)));
}

}  // namespace detail

/// True iff WKB (with a linear approximation of V at x0) can be applied at x,
/// i.e. z > gamma |1 - 4z/3| with z = (x0 - x)/alpha. For V''(x0) = 0 the
/// test reduces to the wavelength condition alone. strictness rescales
/// hbar -> s * hbar inside the validity inequality (default: as printed).
template <Potential P>
bool wkb_pointwise_ok(const P& p, double x0, double x, const Units& u = {},
                      double strictness = 1.0) {
    if (!(x > 0.0) || !(x <= x0))
        throw domain_error("wkb_pointwise_ok: x must lie in the classical region (0, x0]");
    const double alpha = alpha_length(p, x0);
    if (std::isinf(alpha))
        return x0 - x > detail::linear_degenerate_boundary(p, x0, u, strictness);
    const double z = (x0 - x) / alpha;
    const double gamma_eff = std::pow(strictness, 2.0 / 3.0) * gamma_param(p, x0, u);
    return z > gamma_eff * std::abs(1.0 - 4.0 * z / 3.0);
}

/// Derivative-ratio diagnostic of the Taylor expansion of V at x0.
///
/// ratios[l-1] = |V^(l+1)(x0) / V^(l)(x0)| for l = 1..k_max. For integer
/// exponents the sequence terminates at zero; otherwise the series has the
/// finite convergence radius x0. generalized_alpha[l-1] is the length
/// parameter (l+1)|V^(l)/V^(l+1)| of the order-l approximation.
struct TaylorDiagnostic {
    std::vector<double> ratios;
    std::vector<double> generalized_alpha;
    bool terminates = false;
    int zero_from = 0;  // smallest l with V^(l+1) = 0 (when terminates)
    std::optional<double> radius;
};

inline TaylorDiagnostic taylor_convergence_diagnostic(const PowerLawPotential& p, double x0,
                                                      int k_max) {
    if (!(x0 > 0.0)) throw domain_error("taylor_convergence_diagnostic: x0 must be positive");
    TaylorDiagnostic d;
    const double n = p.n();
    const bool integer_n = n == std::floor(n);
    d.terminates = integer_n;
    if (integer_n) d.zero_from = static_cast<int>(n);
    else d.radius = x0;
    d.ratios.reserve(static_cast<size_t>(k_max));
    d.generalized_alpha.reserve(static_cast<size_t>(k_max));
    for (int l = 1; l <= k_max; ++l) {
        const double r = (integer_n && l >= n) ? 0.0 : std::abs(n - l) / x0;
        d.ratios.push_back(r);
        d.generalized_alpha.push_back(r > 0.0 ? (l + 1) / r
                                              : std::numeric_limits<double>::infinity());
    }
    return d;
}

}  // namespace wkbound
