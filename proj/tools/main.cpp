// wkbound: energy brackets for half-line power-law bound states.
//
// Subcommands: analyze (full JSON report), bracket (verdict-only view of
// analyze), region-map (WKB validity partition as JSON or CSV), sweep
// ((beta, n) grid as CSV). Exit codes: 0 ok, 1 usage, 2 numerical failure,
// 3 certified-bracket violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wkbound/wkbound.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitBracketViolation = 3;

struct PotentialArgs {
    double beta = 0.0;
    double n = 0.0;
    double gravity = 0.0;
    double hbar = 1.0;
    double mass = 1.0;
};

struct PipelineArgs {
    std::string trial = "auto";
    double strictness = 1.0;
    double numerov_step = 1e-3;
    double safety_factor = 2.0;
};

void add_units_options(CLI::App* cmd, PotentialArgs& a) {
    cmd->add_option("--hbar", a.hbar, "Value of hbar")->capture_default_str();
    cmd->add_option("--mass", a.mass, "Particle mass")->capture_default_str();
}

void add_potential_options(CLI::App* cmd, PotentialArgs& a, bool with_gravity = true) {
    auto* beta = cmd->add_option("--beta", a.beta, "Potential strength beta in V = beta x^n");
    auto* n = cmd->add_option("--n", a.n, "Potential exponent n (n >= 1)");
    add_units_options(cmd, a);
    if (with_gravity) {
        auto* g = cmd->add_option("--gravity", a.gravity,
                                  "Free-fall shortcut: sets beta = mass * g and n = 1");
        g->excludes(beta)->excludes(n);
    }
}

void add_pipeline_options(CLI::App* cmd, PipelineArgs& a) {
    cmd->add_option("--trial", a.trial, "Trial family: auto, exp-linear, exp-gauss")
        ->check(CLI::IsMember({"auto", "exp-linear", "exp-gauss"}))
        ->capture_default_str();
    cmd->add_option("--strictness", a.strictness,
                    "Strictness factor applied to the wavelength condition")
        ->capture_default_str();
    cmd->add_option("--numerov-step", a.numerov_step, "Reference-solver grid step")
        ->capture_default_str();
    cmd->add_option("--safety-factor", a.safety_factor,
                    "Reference-solver wall distance in units of the turning point (>= 2)")
        ->capture_default_str();
}

// Resolves --gravity and validates the (beta, n) pair. Values may arrive
// from the command line or a config file; the zero defaults mark "absent".
// Violations surface as domain_error, mapped to the usage exit code.
void resolve_potential(PotentialArgs& a, const CLI::App* cmd) {
    const bool gravity_given =
        (cmd->get_option_no_throw("--gravity") && cmd->count("--gravity") > 0) ||
        a.gravity != 0.0;
    if (gravity_given) {
        if (!(a.gravity > 0.0)) throw wkbound::domain_error("--gravity must be positive");
        a.beta = a.mass * a.gravity;
        a.n = 1.0;
        return;
    }
    const bool beta_given = cmd->count("--beta") > 0 || a.beta != 0.0;
    const bool n_given = cmd->count("--n") > 0 || a.n != 0.0;
    if (!beta_given || !n_given)
        throw wkbound::domain_error("either --gravity or both --beta and --n are required");
    if (!(a.beta > 0.0)) throw wkbound::domain_error("--beta must be positive");
    if (!(a.n >= 1.0)) throw wkbound::domain_error("--n must be at least 1");
}

wkbound::AnalysisOptions make_options(const PotentialArgs& pa, const PipelineArgs& pl) {
    wkbound::AnalysisOptions opt;
    opt.units = wkbound::Units(pa.hbar, pa.mass);
    opt.strictness = pl.strictness;
    opt.numerov.step = pl.numerov_step;
    opt.numerov.safety_factor = pl.safety_factor;
    if (pl.trial == "exp-linear") opt.trial = wkbound::TrialKind::ExpLinear;
    if (pl.trial == "exp-gauss") opt.trial = wkbound::TrialKind::ExpGauss;
    return opt;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw wkbound::error("cannot open output file: " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

int run_analyze(const PotentialArgs& pa, const PipelineArgs& pl, const std::string& out_path,
                bool verdict_only) {
    const auto opt = make_options(pa, pl);
    const wkbound::AnalysisReport report = wkbound::analyze_potential(pa.beta, pa.n, opt);
    nlohmann::json j;
    if (verdict_only) {
        j = {{"verdict", wkbound::to_string(report.verdict)},
             {"certified", report.lower.certified},
             {"E_cl", report.lower.energy},
             {"E_ref", report.reference.energy},
             {"E_rr", report.upper.energy}};
        if (!report.lower.reason.empty()) j["reason"] = report.lower.reason;
    } else {
        j = report;
    }
    emit(j.dump(2), out_path);
    const bool alarm =
        report.lower.certified && report.verdict != wkbound::BracketVerdict::Certified;
    return alarm ? kExitBracketViolation : kExitOk;
}

int run_region_map(const PotentialArgs& pa, double x0, double energy, bool x0_given,
                   bool energy_given, double strictness, const std::string& format,
                   const std::string& out_path) {
    if (x0_given == energy_given)
        throw wkbound::domain_error("exactly one of --x0 or --energy is required");
    const wkbound::Units u(pa.hbar, pa.mass);
    const wkbound::PowerLawPotential p(pa.beta, pa.n);
    const double x_turn = x0_given ? x0 : wkbound::turning_point_of_energy(p, energy);
    const auto map = wkbound::region_map(p, x_turn, u, strictness);
    if (format == "csv") {
        emit(wkbound::region_map_to_csv(map), out_path);
    } else {
        const nlohmann::json j = map;
        emit(j.dump(2), out_path);
    }
    return kExitOk;
}

int run_sweep(const PotentialArgs& pa, const PipelineArgs& pl, const std::vector<double>& betas,
              double n_min, double n_max, double n_step, const std::string& out_path) {
    if (betas.empty()) throw wkbound::domain_error("--beta-set must not be empty");
    for (double b : betas)
        if (!(b > 0.0)) throw wkbound::domain_error("--beta-set values must be positive");
    if (!(n_min >= 1.0) || !(n_max <= 6.0) || !(n_min <= n_max) || !(n_step > 0.0))
        throw wkbound::domain_error("--n-min/--n-max must satisfy 1 <= n_min <= n_max <= 6, "
                                    "with a positive --n-step");
    const auto opt = make_options(pa, pl);
    const auto sweep = wkbound::run_sweep(betas, n_min, n_max, n_step, opt);
    emit(wkbound::sweep_to_csv(sweep), out_path);
    return sweep.certified_violation ? kExitBracketViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy brackets for half-line power-law bound states"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value config file with one [subcommand] section per subcommand; "
                   "command-line flags win");

    PotentialArgs an_pot, br_pot, rm_pot, sw_pot;
    PipelineArgs an_pipe, br_pipe, sw_pipe;
    std::string an_out, br_out, rm_out, sw_out;

    auto* analyze = app.add_subcommand("analyze", "Full bracket analysis as a JSON report");
    add_potential_options(analyze, an_pot);
    add_pipeline_options(analyze, an_pipe);
    analyze->add_option("--out", an_out, "Write the report to a file instead of stdout");

    auto* bracket = app.add_subcommand("bracket", "Bracket verdict only");
    add_potential_options(bracket, br_pot);
    add_pipeline_options(bracket, br_pipe);
    bracket->add_option("--out", br_out, "Write the verdict to a file instead of stdout");

    auto* regionmap = app.add_subcommand("region-map", "WKB validity partition of (0, x0]");
    add_potential_options(regionmap, rm_pot, false);
    double rm_x0 = 0.0, rm_energy = 0.0, rm_strictness = 1.0;
    std::string rm_format = "json";
    auto* rm_x0_opt = regionmap->add_option("--x0", rm_x0, "Turning point");
    auto* rm_energy_opt =
        regionmap->add_option("--energy", rm_energy, "Energy; converted to its turning point");
    rm_x0_opt->excludes(rm_energy_opt);
    regionmap->add_option("--format", rm_format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    regionmap->add_option("--strictness", rm_strictness,
                          "Strictness factor applied to the wavelength condition")
        ->capture_default_str();
    regionmap->add_option("--out", rm_out, "Write the map to a file instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "Bracket sweep over (beta, n) as CSV");
    add_units_options(sweep, sw_pot);
    add_pipeline_options(sweep, sw_pipe);
    std::vector<double> sw_betas;
    double sw_n_min = 1.0, sw_n_max = 2.5, sw_n_step = 0.1;
    sweep->add_option("--beta-set", sw_betas, "Comma-separated beta values")->delimiter(',');
    sweep->add_option("--n-min", sw_n_min, "Smallest exponent")->capture_default_str();
    sweep->add_option("--n-max", sw_n_max, "Largest exponent")->capture_default_str();
    sweep->add_option("--n-step", sw_n_step, "Exponent step")->capture_default_str();
    sweep->add_option("--out", sw_out, "Write the CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            resolve_potential(an_pot, analyze);
            return run_analyze(an_pot, an_pipe, an_out, false);
        }
        if (*bracket) {
            resolve_potential(br_pot, bracket);
            return run_analyze(br_pot, br_pipe, br_out, true);
        }
        if (*regionmap) {
            resolve_potential(rm_pot, regionmap);
            return run_region_map(rm_pot, rm_x0, rm_energy, regionmap->count("--x0") > 0,
                                  regionmap->count("--energy") > 0, rm_strictness, rm_format,
                                  rm_out);
        }
        if (*sweep)
            return run_sweep(sw_pot, sw_pipe, sw_betas, sw_n_min, sw_n_max, sw_n_step, sw_out);
    } catch (const wkbound::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wkbound::error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
