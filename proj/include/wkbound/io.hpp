#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "json.hpp"
#include "wkbound/report.hpp"

namespace wkbound {

/// Full-precision textual form of a double (17 significant digits).
inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline nlohmann::json alpha_to_json(double alpha) {
    if (std::isinf(alpha)) return "inf";
    return alpha;
}

inline double alpha_from_json(const nlohmann::json& j) {
    if (j.is_string()) return std::numeric_limits<double>::infinity();
    return j.get<double>();
}

template <typename Enum>
Enum enum_from_string(const std::string& s, std::initializer_list<Enum> all) {
    for (Enum e : all)
        if (s == to_string(e)) return e;
    throw domain_error("unknown enum value in JSON: " + s);
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const Units& u) {
    j = {{"hbar", u.hbar}, {"mass", u.mass}};
}

inline void from_json(const nlohmann::json& j, Units& u) {
    u = Units(j.at("hbar").get<double>(), j.at("mass").get<double>());
}

inline void to_json(nlohmann::json& j, const TurningAnalysis& t) {
    j = {{"x0", t.x0},
         {"energy", t.energy},
         {"alpha", detail::alpha_to_json(t.alpha)},
         {"ratio", t.ratio},
         {"case", to_string(t.case_label)}};
    if (t.gamma) j["gamma"] = *t.gamma;
}

inline void from_json(const nlohmann::json& j, TurningAnalysis& t) {
    t.x0 = j.at("x0").get<double>();
    t.energy = j.at("energy").get<double>();
    t.alpha = detail::alpha_from_json(j.at("alpha"));
    t.ratio = j.at("ratio").get<double>();
    t.case_label = detail::enum_from_string<CaseLabel>(
        j.at("case").get<std::string>(),
        {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::LinearDegenerate,
         CaseLabel::SlopeDegenerate});
    t.gamma.reset();
    if (j.contains("gamma")) t.gamma = j.at("gamma").get<double>();
}

inline void to_json(nlohmann::json& j, const Region& r) {
    j = {{"x_lo", r.x_lo}, {"x_hi", r.x_hi}, {"label", to_string(r.label)}};
}

inline void from_json(const nlohmann::json& j, Region& r) {
    r.x_lo = j.at("x_lo").get<double>();
    r.x_hi = j.at("x_hi").get<double>();
    r.label = detail::enum_from_string<RegionLabel>(
        j.at("label").get<std::string>(),
        {RegionLabel::TooCloseToTurningPoint, RegionLabel::WkbValid,
         RegionLabel::LinearApproxBroken});
}

inline void to_json(nlohmann::json& j, const RegionMap& m) {
    j = {{"turning", m.turning}, {"regions", m.regions}};
    if (m.z1) j["z1"] = *m.z1;
    if (m.z2) j["z2"] = *m.z2;
}

inline void from_json(const nlohmann::json& j, RegionMap& m) {
    j.at("turning").get_to(m.turning);
    j.at("regions").get_to(m.regions);
    m.z1.reset();
    m.z2.reset();
    if (j.contains("z1")) m.z1 = j.at("z1").get<double>();
    if (j.contains("z2")) m.z2 = j.at("z2").get<double>();
}

inline void to_json(nlohmann::json& j, const LowerBound& lb) {
    j = {{"x0_min", lb.x0_min},
         {"E_cl", lb.energy},
         {"case", to_string(lb.case_label)},
         {"certified", lb.certified},
         {"condition_37_holds", lb.condition_37_holds},
         {"method", to_string(lb.method)},
         {"heuristic", lb.heuristic},
         {"reason", lb.reason},
         {"units", lb.units}};
}

inline void from_json(const nlohmann::json& j, LowerBound& lb) {
    lb.x0_min = j.at("x0_min").get<double>();
    lb.energy = j.at("E_cl").get<double>();
    lb.case_label = detail::enum_from_string<CaseLabel>(
        j.at("case").get<std::string>(),
        {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::LinearDegenerate,
         CaseLabel::SlopeDegenerate});
    lb.certified = j.at("certified").get<bool>();
    lb.condition_37_holds = j.at("condition_37_holds").get<bool>();
    lb.method = detail::enum_from_string<SolveMethod>(
        j.at("method").get<std::string>(),
        {SolveMethod::RoughRoot, SolveMethod::ExactRoot, SolveMethod::ClosedForm});
    lb.heuristic = j.at("heuristic").get<bool>();
    lb.reason = j.at("reason").get<std::string>();
    j.at("units").get_to(lb.units);
}

inline void to_json(nlohmann::json& j, const UpperBound& ub) {
    j = {{"E_rr", ub.energy},
         {"a_star", ub.a_star},
         {"trial", to_string(ub.trial)},
         {"quadrature_error_estimate", ub.quadrature_error_estimate}};
}

inline void from_json(const nlohmann::json& j, UpperBound& ub) {
    ub.energy = j.at("E_rr").get<double>();
    ub.a_star = j.at("a_star").get<double>();
    ub.trial = detail::enum_from_string<TrialKind>(
        j.at("trial").get<std::string>(), {TrialKind::ExpLinear, TrialKind::ExpGauss});
    ub.quadrature_error_estimate = j.at("quadrature_error_estimate").get<double>();
}

inline void to_json(nlohmann::json& j, const ReferenceEnergy& r) {
    j = {{"energy", r.energy},
         {"method", to_string(r.method)},
         {"error_estimate", r.error_estimate}};
}

inline void from_json(const nlohmann::json& j, ReferenceEnergy& r) {
    r.energy = j.at("energy").get<double>();
    r.method = detail::enum_from_string<RefMethod>(
        j.at("method").get<std::string>(),
        {RefMethod::Numerov, RefMethod::ClosedFormOscillator, RefMethod::AiryZero,
         RefMethod::PaperWkbFormula});
    r.error_estimate = j.at("error_estimate").get<double>();
}

inline void to_json(nlohmann::json& j, const AnalysisReport& r) {
    j = {{"beta", r.beta},
         {"n", r.n},
         {"units", r.units},
         {"turning", r.turning},
         {"region_map", r.region},
         {"lower_bound", r.lower},
         {"upper_bound", r.upper},
         {"reference", r.reference},
         {"verdict", to_string(r.verdict)},
         {"timing_ms", r.timing_ms}};
}

inline void from_json(const nlohmann::json& j, AnalysisReport& r) {
    r.beta = j.at("beta").get<double>();
    r.n = j.at("n").get<double>();
    j.at("units").get_to(r.units);
    j.at("turning").get_to(r.turning);
    j.at("region_map").get_to(r.region);
    j.at("lower_bound").get_to(r.lower);
    j.at("upper_bound").get_to(r.upper);
    j.at("reference").get_to(r.reference);
    r.verdict = detail::enum_from_string<BracketVerdict>(
        j.at("verdict").get<std::string>(),
        {BracketVerdict::Certified, BracketVerdict::UpperOnly, BracketVerdict::Uncertified});
    r.timing_ms = j.at("timing_ms").get<double>();
}

/// CSV form of a region map: header plus one "x_lo,x_hi,label" row per
/// region, ascending in x.
inline std::string region_map_to_csv(const RegionMap& m) {
    std::string out = "x_lo,x_hi,label\n";
    for (const Region& r : m.regions) {
        out += csv_number(r.x_lo);
        out += ',';
        out += csv_number(r.x_hi);
        out += ',';
        out += to_string(r.label);
        out += '\n';
    }
    return out;
}

/// Fixed sweep columns:
/// beta,n,x0,E_cl,certified,E_ref,E_rr,bracket_holds,case,status
inline std::string sweep_to_csv(const SweepResult& s) {
    std::string out = "beta,n,x0,E_cl,certified,E_ref,E_rr,bracket_holds,case,status\n";
    for (const SweepRow& row : s.rows) {
        out += csv_number(row.beta);
        out += ',';
        out += csv_number(row.n);
        out += ',';
        out += csv_number(row.x0);
        out += ',';
        out += csv_number(row.e_cl);
        out += ',';
        out += row.certified ? "true" : "false";
        out += ',';
        out += csv_number(row.e_ref);
        out += ',';
        out += csv_number(row.e_rr);
        out += ',';
        out += row.bracket_holds ? "true" : "false";
        out += ',';
        out += to_string(row.case_label);
        out += ',';
        out += row.status;
        out += '\n';
    }
    return out;
}

}  // namespace wkbound
