#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wkbound/wkb.hpp"

namespace wkbound {

enum class RegionLabel { TooCloseToTurningPoint, WkbValid, LinearApproxBroken };

/// One labeled interval (x_lo, x_hi] of the classical region.
struct Region {
    double x_lo = 0.0;
    double x_hi = 0.0;
    RegionLabel label = RegionLabel::TooCloseToTurningPoint;
};

/// Ordered (ascending in x) partition of (0, x0] into validity regions,
/// with the z-space boundaries that produced it. z1/z2 are absent when no
/// finite z exists (linear-degenerate) or the second boundary does not
/// apply; z increases toward the wall, z = (x0 - x)/alpha.
struct RegionMap {
    TurningAnalysis turning;
    std::optional<double> z1;
    std::optional<double> z2;
    std::vector<Region> regions;
};

/// Partition of the classical region (0, x0] by WKB usability.
///
/// Case 1 (x0/alpha <= 3/4): too-close band next to the turning point, valid
/// band toward the wall; the valid band may be empty, in which case the map
/// is the single too-close region. Case 2 adds a third region next to the
/// wall when the second boundary z2 = gamma/(4 gamma/3 - 1) fits below
/// x0/alpha; there the linear approximation itself is broken. Equal slopes
/// (4 gamma/3 = 1) behave exactly like case 1. A vanishing V'' drops z
/// entirely and the boundary comes from the wavelength condition alone.
template <Potential P>
RegionMap region_map(const P& p, double x0, const Units& u = {}, double strictness = 1.0) {
    if (!(x0 > 0.0)) throw domain_error("region_map: x0 must be positive");
    RegionMap map;
    map.turning = analyze_turning_point(p, x0, u);

    // Bands narrower than this are the "one point" collapse of the valid
    // region, up to rounding of the boundary arithmetic.
    const double collapse_tol = 1e-12 * x0;

    if (map.turning.case_label == CaseLabel::LinearDegenerate) {
        const double d = detail::linear_degenerate_boundary(p, x0, u, strictness);
        const double x_b = x0 - d;
        if (x_b > collapse_tol) {
            map.regions.push_back({0.0, x_b, RegionLabel::WkbValid});
            map.regions.push_back({x_b, x0, RegionLabel::TooCloseToTurningPoint});
        } else {
            map.regions.push_back({0.0, x0, RegionLabel::TooCloseToTurningPoint});
        }
        return map;
    }

    const double alpha = map.turning.alpha;
    const double z_max = map.turning.ratio;
    const double gamma_eff = std::pow(strictness, 2.0 / 3.0) * *map.turning.gamma;
    const double z1 = gamma_eff / (1.0 + 4.0 * gamma_eff / 3.0);
    map.z1 = z1;

    const double x_b1 = x0 - alpha * z1;
    if (z1 >= z_max || x_b1 <= collapse_tol) {
        // The valid band collapsed: WKB is unusable anywhere in (0, x0].
        map.regions.push_back({0.0, x0, RegionLabel::TooCloseToTurningPoint});
        return map;
    }

    const bool slope_degenerate = std::abs(4.0 * gamma_eff / 3.0 - 1.0) < kSlopeDegenerateTol;
    if (!slope_degenerate && 4.0 * gamma_eff / 3.0 > 1.0) {
        const double z2 = gamma_eff / (4.0 * gamma_eff / 3.0 - 1.0);
        if (z2 <= z_max) {
            map.z2 = z2;
            const double x_b2 = x0 - alpha * z2;
            map.regions.push_back({0.0, x_b2, RegionLabel::LinearApproxBroken});
            map.regions.push_back({x_b2, x_b1, RegionLabel::WkbValid});
            map.regions.push_back({x_b1, x0, RegionLabel::TooCloseToTurningPoint});
            return map;
        }
    }

    map.regions.push_back({0.0, x_b1, RegionLabel::WkbValid});
    map.regions.push_back({x_b1, x0, RegionLabel::TooCloseToTurningPoint});
    return map;
}

inline const char* to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::TooCloseToTurningPoint: return "TooCloseToTurningPoint";
        case RegionLabel::WkbValid: return "WkbValid";
        case RegionLabel::LinearApproxBroken: return "LinearApproxBroken";
    }
    return "?";
}

inline const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::LinearDegenerate: return "LinearDegenerate";
        case CaseLabel::SlopeDegenerate: return "SlopeDegenerate";
    }
    return "?";
}

}  // namespace wkbound
