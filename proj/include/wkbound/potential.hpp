#pragma once

#include <cmath>
#include <concepts>
#include <functional>

#include "wkbound/errors.hpp"
#include "wkbound/numerics.hpp"

namespace wkbound {

/// Contract every analysis routine consumes: value and two derivatives on
/// x > 0, plus the hard-wall flag. The in-scope family is monotonically
/// increasing (d1 > 0) with d2 >= 0; d2 may be identically zero.
template <typename P>
concept Potential = requires(const P& p, double x) {
    { p.value(x) } -> std::convertible_to<double>;
    { p.d1(x) } -> std::convertible_to<double>;
    { p.d2(x) } -> std::convertible_to<double>;
    { p.hard_wall_at_origin() } -> std::convertible_to<bool>;
};

/// V(x) = beta * x^n for x > 0, infinite wall at x <= 0.
///
/// beta > 0 and n >= 1; non-integer exponents are allowed. Derivatives are
/// analytic, never differenced.
class PowerLawPotential {
  public:
    PowerLawPotential(double beta, double n) : beta_(beta), n_(n) {
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw domain_error("PowerLawPotential: beta must be positive and finite");
        if (!(n >= 1.0) || !std::isfinite(n))
            throw domain_error("PowerLawPotential: exponent n must satisfy n >= 1");
    }

    double beta() const { return beta_; }
    double n() const { return n_; }

    double value(double x) const {
        require_outside_wall(x);
        return beta_ * std::pow(x, n_);
    }

    double d1(double x) const {
        require_outside_wall(x);
        return beta_ * n_ * std::pow(x, n_ - 1.0);
    }

    double d2(double x) const {
        require_outside_wall(x);
        if (n_ == 1.0) return 0.0;
        return beta_ * n_ * (n_ - 1.0) * std::pow(x, n_ - 2.0);
    }

    bool hard_wall_at_origin() const { return true; }

    /// Unique x0 with V(x0) = E (closed form).
    double turning_point(double energy) const {
        if (!(energy > 0.0))
            throw domain_error("turning_point: no turning point for E <= 0");
        return std::pow(energy / beta_, 1.0 / n_);
    }

  private:
    static void require_outside_wall(double x) {
        if (!(x > 0.0)) throw domain_error("PowerLawPotential: x <= 0 is inside the wall");
    }

    double beta_;
    double n_;
};

/// Type-erased potential for user-supplied V, V', V''. Analyses run on it,
/// but certified lower bounds are only issued for PowerLawPotential.
struct GenericPotential {
    std::function<double(double)> v;
    std::function<double(double)> dv;
    std::function<double(double)> d2v;
    bool wall_at_origin = true;

    double value(double x) const { return v(x); }
    double d1(double x) const { return dv(x); }
    double d2(double x) const { return d2v(x); }
    bool hard_wall_at_origin() const { return wall_at_origin; }
};

/// Unique x0 with V(x0) = E, from monotonicity.
inline double turning_point_of_energy(const PowerLawPotential& p, double energy) {
    return p.turning_point(energy);
}

template <Potential P>
double turning_point_of_energy(const P& p, double energy) {
    if (!(energy > 0.0))
        throw domain_error("turning_point_of_energy: no turning point for E <= 0");
    return find_root_log_bracket([&](double x) { return p.value(x) - energy; });
}

}  // namespace wkbound
