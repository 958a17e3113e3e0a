#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "wkbound/bound.hpp"
#include "wkbound/numerov.hpp"
#include "wkbound/variational.hpp"

namespace wkbound {

enum class BracketVerdict { Certified, UpperOnly, Uncertified };

struct AnalysisOptions {
    Units units;
    std::optional<TrialKind> trial;  // default: ExpLinear for n < 2, ExpGauss for n >= 2
    double strictness = 1.0;
    NumerovConfig numerov;
};

/// Full single-potential pipeline output: turning-point analysis, region
/// map, both bounds, the reference energy, and the bracket verdict.
struct AnalysisReport {
    double beta = 0.0;
    double n = 0.0;
    Units units;
    TurningAnalysis turning;
    RegionMap region;
    LowerBound lower;
    UpperBound upper;
    ReferenceEnergy reference;
    BracketVerdict verdict = BracketVerdict::Uncertified;
    double timing_ms = 0.0;
};

inline TrialKind default_trial_for(double n) {
    return n < 2.0 ? TrialKind::ExpLinear : TrialKind::ExpGauss;
}

/// E_cl <= E_ref <= E_rr, allowing the reported numeric error bars on the
/// upper side (reference bisection tolerance plus quadrature estimate).
inline bool bracket_ordering_holds(const LowerBound& lb, const ReferenceEnergy& ref,
                                   const UpperBound& ub) {
    const double slack = ref.error_estimate + ub.quadrature_error_estimate;
    return lb.energy <= ref.energy && ref.energy <= ub.energy + slack;
}

inline AnalysisReport analyze_potential(double beta, double n, const AnalysisOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const PowerLawPotential p(beta, n);
    AnalysisReport r;
    r.beta = beta;
    r.n = n;
    r.units = opt.units;
    r.lower = lower_bound_energy(p, opt.units);
    r.turning = analyze_turning_point(p, r.lower.x0_min, opt.units);
    r.region = region_map(p, r.lower.x0_min, opt.units, opt.strictness);
    r.upper = minimize_upper_bound(p, opt.trial.value_or(default_trial_for(n)), opt.units);
    r.reference = numerov_ground_state(p, opt.numerov, opt.units);
    // Uncertified: the lower bound was refused (only the variational side is
    // meaningful). UpperOnly: a certified lower bound failed the numeric
    // ordering check, so only the upper bound still stands; this is the
    // alarm state the CLI maps to its dedicated exit code.
    if (r.lower.certified)
        r.verdict = bracket_ordering_holds(r.lower, r.reference, r.upper)
                        ? BracketVerdict::Certified
                        : BracketVerdict::UpperOnly;
    else
        r.verdict = BracketVerdict::Uncertified;
    r.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// One (beta, n) line of a parameter sweep. status is "ok" or the error
/// message of the stage that failed; failed rows carry zeros.
struct SweepRow {
    double beta = 0.0;
    double n = 0.0;
    double x0 = 0.0;
    double e_cl = 0.0;
    double e_ref = 0.0;
    double e_rr = 0.0;
    bool certified = false;
    bool bracket_holds = false;
    CaseLabel case_label = CaseLabel::Case1;
    std::string status = "ok";
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool certified_violation = false;  // a certified row broke the bracket ordering
};

/// Runs the bracket pipeline over n in [n_min, n_max] (step n_step) times
/// the given beta values. Row failures are recorded, never fatal.
inline SweepResult run_sweep(const std::vector<double>& betas, double n_min, double n_max,
                             double n_step, const AnalysisOptions& opt = {}) {
    if (betas.empty()) throw domain_error("run_sweep: beta set must not be empty");
    if (!(n_min >= 1.0) || !(n_max <= 6.0) || !(n_min <= n_max))
        throw domain_error("run_sweep: exponent range must lie within [1, 6]");
    if (!(n_step > 0.0)) throw domain_error("run_sweep: n_step must be positive");

    SweepResult result;
    for (int k = 0;; ++k) {
        const double n = n_min + k * n_step;
        if (n > n_max + 0.5 * n_step) break;
        for (double beta : betas) {
            SweepRow row;
            row.beta = beta;
            row.n = n;
            try {
                const PowerLawPotential p(beta, n);
                const LowerBound lb = lower_bound_energy(p, opt.units);
                const ReferenceEnergy ref = numerov_ground_state(p, opt.numerov, opt.units);
                const UpperBound ub =
                    minimize_upper_bound(p, opt.trial.value_or(default_trial_for(n)), opt.units);
                row.x0 = lb.x0_min;
                row.e_cl = lb.energy;
                row.e_ref = ref.energy;
                row.e_rr = ub.energy;
                row.certified = lb.certified;
                row.case_label = lb.case_label;
                row.bracket_holds = bracket_ordering_holds(lb, ref, ub);
                if (row.certified && !row.bracket_holds) result.certified_violation = true;
            } catch (const error& e) {
                row.status = e.what();
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

inline const char* to_string(BracketVerdict v) {
    switch (v) {
        case BracketVerdict::Certified: return "Certified";
        case BracketVerdict::UpperOnly: return "UpperOnly";
        case BracketVerdict::Uncertified: return "Uncertified";
    }
    return "?";
}

}  // namespace wkbound
