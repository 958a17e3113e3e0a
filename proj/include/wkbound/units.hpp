#pragma once

#include <cmath>

#include "wkbound/errors.hpp"

namespace wkbound {

/// Unit system: hbar and the particle mass. Defaults are natural units.
struct Units {
    double hbar = 1.0;
    double mass = 1.0;

    Units() = default;
    Units(double hbar_, double mass_) : hbar(hbar_), mass(mass_) {
        if (!(hbar > 0.0) || !std::isfinite(hbar))
            throw domain_error("Units: hbar must be positive and finite");
        if (!(mass > 0.0) || !std::isfinite(mass))
            throw domain_error("Units: mass must be positive and finite");
    }
};

}  // namespace wkbound
