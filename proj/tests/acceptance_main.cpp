// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "wkbound/wkbound.hpp"

using namespace wkbound;

namespace {

int g_failures = 0;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << "FAILED " << what;
        }
    }
};

void report(int idx, const char* name, const Check& c, const std::string& extra = "") {
    std::printf("%s  criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", idx, name,
                extra.empty() ? "" : " -- ", extra.c_str());
    if (!c.ok) {
        std::printf("      %s\n", c.detail.str().c_str());
        ++g_failures;
    }
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Truncated harmonic oscillator, hbar = m = omega = 1 (beta = 1/2, n = 2).
void criterion_1() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const PowerLawPotential p(0.5, 2.0);

    const double x0 = solve_x0_rough(p);
    c.expect(std::abs(x0 - 0.59460355750136053) < 1e-10, "x0 = (1/8)^(1/4) to 1e-10");

    const LowerBound lb = lower_bound_energy(p);
    c.expect(std::abs(lb.energy - 0.17677669529663689) < 1e-10, "E_cl = 1/(2 sqrt 8) to 1e-10");

    const ReferenceEnergy ref = numerov_ground_state(p);
    c.expect(std::abs(ref.energy - 1.5) < 1e-6, "Numerov E0 = 3/2 to 1e-6");

    const UpperBound ub = minimize_upper_bound(p, TrialKind::ExpGauss);
    c.expect(std::abs(ub.energy - 1.5) < 1e-8, "Rayleigh-Ritz E_rr = 3/2 to 1e-8");

    c.expect(lb.certified && bracket_ordering_holds(lb, ref, ub),
             "certified bracket E_cl <= E0 <= E_rr");

    const double elapsed = seconds_since(t0);
    c.expect(elapsed < 1.0, "runtime < 1 s");
    std::ostringstream extra;
    extra << "E_cl=" << lb.energy << " E0=" << ref.energy << " E_rr=" << ub.energy << " ("
          << elapsed << " s)";
    report(1, "harmonic oscillator reproduction", c, extra.str());
}

// 2. Free fall, hbar = m = g = 1 (beta = 1, n = 1).
void criterion_2() {
    Check c;
    const PowerLawPotential p(1.0, 1.0);

    const double x0 = solve_x0_rough(p);
    c.expect(x0 == 0.5, "x0 = 1/2 exactly");

    const LowerBound lb = lower_bound_energy(p);
    c.expect(std::abs(lb.energy - 0.5) < 1e-12, "E_cl = 1/2 to 1e-12");

    const double airy_e0 = bouncer_spectrum(1, 1.0).energy;
    const ReferenceEnergy ref = numerov_ground_state(p);
    c.expect(std::abs(airy_e0 - 1.8557570814892938) < 1e-12, "Airy-zero oracle value");
    c.expect(std::abs(ref.energy - airy_e0) < 1e-5, "Numerov within 1e-5 of the Airy value");

    const UpperBound ub = minimize_upper_bound(p, TrialKind::ExpLinear);
    c.expect(std::abs(ub.energy - 1.9655560456566724) < 1e-8,
             "E_rr = (3/2)^(5/3) to 1e-8");

    c.expect(lb.certified && bracket_ordering_holds(lb, ref, ub),
             "certified bracket E_cl <= E0 <= E_rr");

    const double ratio = freefall_paper_wkb(1, 1.0).energy / airy_e0;
    c.expect(std::abs(ratio - 0.9924) <= 5e-4, "WKB/Airy ground ratio = 0.9924 +- 0.0005");
    std::ostringstream extra;
    extra << "E_cl=" << lb.energy << " E0=" << ref.energy << " E_rr=" << ub.energy
          << " ratio=" << ratio;
    report(2, "free-fall reproduction", c, extra.str());
}

// 3. Certification sweep: n in {1.0, ..., 2.5} x beta in {0.1, 1, 10}.
void criterion_3() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    for (int k = 0; k <= 15; ++k) {
        const double n = (10.0 + k) / 10.0;
        for (double beta : {0.1, 1.0, 10.0}) {
            const PowerLawPotential p(beta, n);
            const LowerBound lb = lower_bound_energy(p);
            const ReferenceEnergy ref = numerov_ground_state(p);
            ++cases;
            std::ostringstream tag;
            tag << "(beta=" << beta << ", n=" << n << ")";
            c.expect(lb.certified, "certified " + tag.str());
            c.expect(lb.energy < ref.energy, "E_cl < E0 strictly " + tag.str());
            c.expect(condition_37_check(lb.energy, lb.x0_min),
                     "uncertainty condition " + tag.str());
        }
    }
    const double elapsed = seconds_since(t0);
    c.expect(cases == 48, "48 cases");
    c.expect(elapsed < 30.0, "runtime < 30 s");
    std::ostringstream extra;
    extra << cases << " cases in " << elapsed << " s";
    report(3, "certification sweep", c, extra.str());
}

// 4. Case-2 refusal for n in {3, 4, 5}.
void criterion_4() {
    Check c;
    for (double n : {3.0, 4.0, 5.0}) {
        const LowerBound lb = lower_bound_energy(PowerLawPotential(1.0, n));
        std::ostringstream tag;
        tag << "n=" << n;
        c.expect(!lb.certified, "refused at " + tag.str());
        c.expect(!case2_certification_inequality(n),
                 "certification inequality false at " + tag.str());
    }
    c.expect(4.0 / 27.0 < 3.375, "n=4 arithmetic: n/(n-1)^3 = 4/27 < 27/8");
    report(4, "case-2 refusal", c);
}

// 5. Boundary fixed point and exact partition for 20 random case-1 maps.
void criterion_5() {
    Check c;
    std::mt19937 rng(5550123u);
    std::uniform_real_distribution<double> log_beta(-3.0, 3.0);
    std::uniform_real_distribution<double> n_dist(1.05, 2.45);
    std::uniform_real_distribution<double> x0_dist(0.1, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const PowerLawPotential p(std::exp(log_beta(rng)), n_dist(rng));
        const double x0 = x0_dist(rng);
        const auto map = region_map(p, x0);
        std::ostringstream tag;
        tag << "(trial " << trial << ")";
        if (!map.z1) {
            c.expect(false, "z1 present " + tag.str());
            continue;
        }
        const double gamma = *map.turning.gamma;
        c.expect(std::abs(*map.z1 - gamma * (1.0 - 4.0 * (*map.z1) / 3.0)) < 1e-10,
                 "z1 fixed point " + tag.str());
        c.expect(map.regions.front().x_lo == 0.0, "partition starts at 0 " + tag.str());
        c.expect(map.regions.back().x_hi == x0, "partition ends at x0 " + tag.str());
        for (size_t i = 0; i + 1 < map.regions.size(); ++i)
            c.expect(map.regions[i].x_hi == map.regions[i + 1].x_lo,
                     "adjacent boundaries shared exactly " + tag.str());
    }
    report(5, "region-map fixed points", c);
}

// 6. x0/alpha = (n-1)/2 for n > 1, independent of beta and x0.
void criterion_6() {
    Check c;
    std::mt19937 rng(660660u);
    std::uniform_real_distribution<double> log_beta(-3.0, 3.0);
    std::uniform_real_distribution<double> n_dist(1.001, 6.0);
    std::uniform_real_distribution<double> x0_dist(0.01, 20.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double n = n_dist(rng);
        const PowerLawPotential p(std::exp(log_beta(rng)), n);
        const double x0 = x0_dist(rng);
        const double ratio = x0 / alpha_length(p, x0);
        std::ostringstream tag;
        tag << "(trial " << trial << ")";
        c.expect(std::abs(ratio - (n - 1.0) / 2.0) < 1e-12, "ratio identity " + tag.str());
    }
    report(6, "power-law structural identity", c);
}

// 7. Oracle equivalences: x0 closed form vs root-finder, quadrature vs
//    gamma closed forms, Ai(0).
void criterion_7() {
    Check c;
    std::mt19937 rng(770777u);
    std::uniform_real_distribution<double> log_beta(-3.0, 3.0);
    std::uniform_real_distribution<double> n_dist(1.0, 2.5);
    for (int trial = 0; trial < 50; ++trial) {
        const double beta = std::exp(log_beta(rng));
        const double n = n_dist(rng);
        const double closed = std::pow(1.0 / (8.0 * beta * n), 1.0 / (n + 2.0));
        const PowerLawPotential p(beta, n);
        const double rooted = find_root_log_bracket(
            [&](double x) { return x * x * x * p.d1(x) - 0.125; });
        std::ostringstream tag;
        tag << "(trial " << trial << ")";
        c.expect(std::abs(rooted - closed) <= 1e-10 * closed,
                 "x0 closed form vs root-finder " + tag.str());
    }

    for (double n : {1.0, 2.0}) {
        const PowerLawPotential p(1.0, n);
        for (double a : {0.2, 0.5, 1.0, 2.0, 4.0}) {
            const double lin_expected =
                0.5 * a * a + std::tgamma(n + 3.0) / (std::pow(2.0, n + 1.0) * std::pow(a, n));
            const double gauss_expected =
                1.5 * a + std::tgamma((n + 3.0) / 2.0) / std::tgamma(1.5) *
                              std::pow(2.0 * a, -n / 2.0);
            std::ostringstream tag;
            tag << "(n=" << n << ", a=" << a << ")";
            c.expect(std::abs(rayleigh_quotient(p, TrialKind::ExpLinear, a) - lin_expected) <=
                         1e-9 * lin_expected,
                     "ExpLinear quadrature vs closed form " + tag.str());
            c.expect(std::abs(rayleigh_quotient(p, TrialKind::ExpGauss, a) - gauss_expected) <=
                         1e-9 * gauss_expected,
                     "ExpGauss quadrature vs closed form " + tag.str());
        }
    }

    c.expect(std::abs(airy_ai(0.0) - 0.3550280539) < 1e-9, "Ai(0) to 1e-9");
    report(7, "oracle equivalences", c);
}

// 8. Numerov self-consistency on the criteria 1-2 problems.
void criterion_8() {
    Check c;
    for (const auto& p : {PowerLawPotential(0.5, 2.0), PowerLawPotential(1.0, 1.0)}) {
        NumerovConfig base;
        NumerovConfig halved;
        halved.step = base.step / 2.0;
        const double e_base = numerov_ground_state(p, base).energy;
        const double e_halved = numerov_ground_state(p, halved).energy;
        std::ostringstream tag;
        tag << "(n=" << p.n() << ")";
        c.expect(std::abs(e_base - e_halved) < 1e-6, "step halving < 1e-6 " + tag.str());

        NumerovConfig far;
        far.safety_factor = 4.0;
        const double e_far = numerov_ground_state(p, far).energy;
        c.expect(std::abs(e_base - e_far) < 1e-8, "safety-factor doubling < 1e-8 " + tag.str());
    }
    report(8, "Numerov self-consistency", c);
}

}  // namespace

int main() {
    std::printf("wkbound acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
