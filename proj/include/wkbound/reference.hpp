#pragma once

#include <cmath>
#include <numbers>

#include "wkbound/airy.hpp"
#include "wkbound/units.hpp"

namespace wkbound {

enum class RefMethod { Numerov, ClosedFormOscillator, AiryZero, PaperWkbFormula };

/// A ground-truth (or reference-formula) energy with its numeric error bar.
struct ReferenceEnergy {
    double energy = 0.0;
    RefMethod method = RefMethod::Numerov;
    double error_estimate = 0.0;
};

/// Ground state of the oscillator truncated by a wall at x = 0: only odd
/// oscillator states survive, so E0 = (3/2) hbar omega.
inline ReferenceEnergy truncated_oscillator_exact(double omega, const Units& u = {}) {
    if (!(omega > 0.0)) throw domain_error("truncated_oscillator_exact: omega must be positive");
    return {1.5 * u.hbar * omega, RefMethod::ClosedFormOscillator, 0.0};
}

/// k-th level of the truncated oscillator (k = 0 is the ground state):
/// hbar omega (2k + 3/2).
inline double truncated_oscillator_level(int k, double omega, const Units& u = {}) {
    if (k < 0) throw domain_error("truncated_oscillator_level: k must be >= 0");
    if (!(omega > 0.0)) throw domain_error("truncated_oscillator_level: omega must be positive");
    return u.hbar * omega * (2.0 * k + 1.5);
}

/// k-th bound state of the bouncer V = m g x (k = 1 is the ground state):
/// E_k = |a_k| (m g^2 hbar^2 / 2)^(1/3) with a_k the k-th Airy zero.
inline ReferenceEnergy bouncer_spectrum(int k, double g, const Units& u = {}) {
    if (!(g > 0.0)) throw domain_error("bouncer_spectrum: g must be positive");
    const double a_k = airy_ai_zero(k);  // range-checks k
    const double scale = std::cbrt(u.mass * g * g * u.hbar * u.hbar / 2.0);
    return {std::abs(a_k) * scale, RefMethod::AiryZero, 1e-12 * std::abs(a_k) * scale};
}

/// First-order WKB spectrum of the bouncer:
/// E_k = (m g^2 hbar^2 / 2)^(1/3) {(3 pi / 4)(2k - 1/2)}^(2/3), k >= 1.
/// The index starts at 1 so the braced factor stays positive.
inline ReferenceEnergy freefall_paper_wkb(int kidx, double g, const Units& u = {}) {
    if (!(g > 0.0)) throw domain_error("freefall_paper_wkb: g must be positive");
    if (kidx < 1)
        throw domain_error(
            "freefall_paper_wkb: level index starts at 1; smaller indices would make the "
            "quantization factor non-positive");
    const double scale = std::cbrt(u.mass * g * g * u.hbar * u.hbar / 2.0);
    const double braced = 0.75 * std::numbers::pi * (2.0 * kidx - 0.5);
    return {scale * std::pow(braced, 2.0 / 3.0), RefMethod::PaperWkbFormula, 0.0};
}

/// Ratio of the WKB level to the free-fall threshold energy:
/// E_k / E_cl = {(3 pi / 2)(2k - 1/2)}^(2/3).
inline double freefall_wkb_ratio_to_threshold(int kidx) {
    if (kidx < 1) throw domain_error("freefall_wkb_ratio_to_threshold: level index starts at 1");
    return std::pow(1.5 * std::numbers::pi * (2.0 * kidx - 0.5), 2.0 / 3.0);
}

inline const char* to_string(RefMethod m) {
    switch (m) {
        case RefMethod::Numerov: return "Numerov";
        case RefMethod::ClosedFormOscillator: return "ClosedFormOscillator";
        case RefMethod::AiryZero: return "AiryZero";
        case RefMethod::PaperWkbFormula: return "PaperWkbFormula";
    }
    return "?";
}

}  // namespace wkbound
