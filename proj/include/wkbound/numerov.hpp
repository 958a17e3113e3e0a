#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "wkbound/potential.hpp"
#include "wkbound/reference.hpp"
#include "wkbound/units.hpp"

namespace wkbound {

struct NumerovConfig {
    double step = 1e-3;             // requested grid step (actual step lands on x_max)
    double x_max = 0.0;             // 0 = auto: safety_factor * turning point of the bracket top
    double energy_tolerance = 1e-10;
    int max_bisections = 200;
    double safety_factor = 2.0;     // must be >= 2
};

namespace detail {

struct Shot {
    int nodes = 0;            // sign changes of psi over the whole grid
    int nodes_classical = 0;  // sign changes left of the supplied index
    double psi_end = 0.0;
};

/// Outward Numerov integration of psi'' = f psi on a fixed grid with the
/// potential sampled once. psi(0) = 0, psi(h) = h.
class NumerovGrid {
  public:
    template <Potential P>
    NumerovGrid(const P& p, double x_max, double step_req, const Units& u) {
        n_ = static_cast<int>(std::ceil(x_max / step_req));
        if (n_ < 8) n_ = 8;
        h_ = x_max / n_;
        k2m_ = 2.0 * u.mass / (u.hbar * u.hbar);
        v_.resize(static_cast<size_t>(n_) + 1);
        v_[0] = 0.0;  // wall limit; multiplies psi(0) = 0 only
        for (int i = 1; i <= n_; ++i) v_[i] = p.value(i * h_);
    }

    double x_max() const { return n_ * h_; }
    double step() const { return h_; }
    double v_max() const { return v_.back(); }

    /// The stencil factors 1 - h^2 f / 12 must stay well away from zero for
    /// every energy up to e_top, or the recurrence flips signs spuriously.
    void require_stable(double e_top) const {
        const double f_max = k2m_ * std::max(v_max(), e_top);
        if (h_ * h_ * f_max / 12.0 >= 0.5)
            throw grid_error("numerov_ground_state: step too coarse for the Numerov stencil "
                             "at this energy scale");
    }

    Shot shoot(double energy, int classical_end = -1) const {
        const double h2 = h_ * h_;
        const double c = h2 / 12.0;
        auto f = [&](int i) { return k2m_ * (v_[static_cast<size_t>(i)] - energy); };
        Shot s;
        double y_prev = 0.0;
        double y_cur = h_;
        double w_prev = 0.0;
        double w_cur = (1.0 - c * f(1)) * y_cur;
        for (int i = 1; i < n_; ++i) {
            const double w_next = 2.0 * w_cur - w_prev + h2 * f(i) * y_cur;
            double y_next = w_next / (1.0 - c * f(i + 1));
            double w_scaled = w_next;
            if (y_cur * y_next < 0.0) {
                ++s.nodes;
                if (i + 1 <= classical_end) ++s.nodes_classical;
            }
            if (std::abs(y_next) > 1e250) {  // rescale deep in the forbidden region
                const double scale = 1e-250;
                y_next *= scale;
                w_scaled *= scale;
                w_cur *= scale;
                y_cur *= scale;
            }
            w_prev = w_cur;
            w_cur = w_scaled;
            y_prev = y_cur;
            y_cur = y_next;
        }
        s.psi_end = y_cur;
        return s;
    }

  private:
    int n_ = 0;
    double h_ = 0.0;
    double k2m_ = 0.0;
    std::vector<double> v_;
};

/// True once the shooting solution at this energy lies above the ground
/// state of the boxed problem.
inline bool above_ground(const Shot& s) { return s.nodes >= 1 || s.psi_end < 0.0; }

template <Potential P>
double numerov_solve(const P& p, const Units& u, const NumerovConfig& cfg, double step_req) {
    // Energy scale of the problem: hbar^2/(2 m x^2) = V(x) crossing.
    const double x_scale = find_root_log_bracket(
        [&](double x) { return u.hbar * u.hbar / (2.0 * u.mass * x * x) - p.value(x); });
    double e_hi = p.value(x_scale);

    std::optional<NumerovGrid> grid;
    for (int it = 0;; ++it) {
        if (it > 60)
            throw solver_error("numerov_ground_state: bisection bracket not found in [0, V(x_max)]");
        double x_max = cfg.x_max;
        if (x_max <= 0.0) {
            x_max = cfg.safety_factor * turning_point_of_energy(p, e_hi);
        } else if (e_hi > p.value(x_max)) {
            throw solver_error("numerov_ground_state: bisection bracket not found in [0, V(x_max)]");
        }
        grid.emplace(p, x_max, step_req, u);
        grid->require_stable(e_hi);
        if (above_ground(grid->shoot(e_hi))) break;
        e_hi *= 2.0;
    }

    if (cfg.x_max <= 0.0) {
        // Final grid: wall anchored well past the bracket-top turning point,
        // so the residual wall shift sits far below the energy tolerance.
        const double x_wall = cfg.safety_factor * turning_point_of_energy(p, 8.0 * e_hi);
        grid.emplace(p, x_wall, step_req, u);
        grid->require_stable(e_hi);
    }

    double lo = 0.0, hi = e_hi;
    for (int it = 0; it < cfg.max_bisections && hi - lo > 0.25 * cfg.energy_tolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (above_ground(grid->shoot(mid)))
            hi = mid;
        else
            lo = mid;
    }
    const double e0 = 0.5 * (lo + hi);

    const double x_turn = turning_point_of_energy(p, e0);
    const int classical_end = static_cast<int>(x_turn / grid->step());
    if (grid->shoot(e0, classical_end).nodes_classical != 0)
        throw grid_error("numerov_ground_state: interior node count is inconsistent with the "
                         "ground state; the grid is too coarse");
    return e0;
}

}  // namespace detail

/// Lowest eigenvalue of -hbar^2/2m psi'' + V psi = E psi on the half line
/// with psi(0) = 0, by outward Numerov shooting and bisection on the energy.
///
/// The reported energy comes from the half-step grid; error_estimate is the
/// step-halving difference (never below the bisection tolerance).
template <Potential P>
ReferenceEnergy numerov_ground_state(const P& p, const NumerovConfig& cfg = {},
                                     const Units& u = {}) {
    if (!p.hard_wall_at_origin())
        throw domain_error("numerov_ground_state: potential must have a hard wall at the origin");
    if (!(cfg.step > 0.0)) throw domain_error("numerov_ground_state: step must be positive");
    if (!(cfg.energy_tolerance > 0.0))
        throw domain_error("numerov_ground_state: energy_tolerance must be positive");
    if (!(cfg.safety_factor >= 2.0))
        throw domain_error("numerov_ground_state: safety_factor must be >= 2");
    if (cfg.max_bisections < 1)
        throw domain_error("numerov_ground_state: max_bisections must be >= 1");

    const double e_coarse = detail::numerov_solve(p, u, cfg, cfg.step);
    const double e_fine = detail::numerov_solve(p, u, cfg, 0.5 * cfg.step);
    ReferenceEnergy r;
    r.energy = e_fine;
    r.method = RefMethod::Numerov;
    r.error_estimate = std::max(std::abs(e_coarse - e_fine), cfg.energy_tolerance);
    return r;
}

}  // namespace wkbound
