#include "bolab/reports.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON has no inf/nan literals; encode them as strings so reports stay loadable.
json num(double v) {
    if (std::isfinite(v)) return v;
    return v != v ? json("nan") : json(v > 0 ? "inf" : "-inf");
}

json num_list(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(num(x));
    return arr;
}

} // namespace

std::string diagnostics_csv(const Trajectory& traj) {
    std::string out = "t,mass,l2,hamiltonian,hs_half,tail_fraction,sup_norm\n";
    for (const DiagnosticsRecord& r : traj.diagnostics) {
        out += fmt(r.t);
        out += ',';
        out += fmt(r.mass);
        out += ',';
        out += fmt(r.l2);
        out += ',';
        if (r.hamiltonian) out += fmt(*r.hamiltonian);
        out += ',';
        out += fmt(r.sobolev_half);
        out += ',';
        out += fmt(r.tail_fraction);
        out += ',';
        out += fmt(r.sup);
        out += '\n';
    }
    return out;
}

std::string limit_report_json(const LimitStudyReport& rep) {
    json j;
    j["pair"] = rep.pair;
    j["deltas"] = num_list(rep.deltas);
    j["errors"] = num_list(rep.errors);
    if (rep.monotone_decreasing) j["monotone_decreasing"] = *rep.monotone_decreasing;
    else j["monotone_decreasing"] = nullptr;
    if (rep.fitted_rate) j["fitted_rate"] = num(*rep.fitted_rate);
    else j["fitted_rate"] = nullptr;
    j["rescaling_note"] = rep.rescaling_note;
    j["warnings"] = rep.warnings;
    j["any_blowup"] = rep.any_blowup;
    return j.dump(2) + "\n";
}

std::string uc_report_json(const UCReport& rep) {
    json j;
    j["interval"] = {num(rep.a), num(rep.b)};
    j["f_sup"] = num(rep.f_sup);
    j["f_inf"] = num(rep.f_inf);
    j["partner_sup"] = num(rep.partner_sup);
    j["partner_inf"] = num(rep.partner_inf);
    j["l2"] = num(rep.l2);
    j["partner"] = rep.partner == UcPartnerKind::Hilbert ? "hilbert" : "ilw_dx";
    if (rep.partner == UcPartnerKind::IlwDx) j["delta"] = num(rep.delta);
    j["verdict"] = rep.verdict == UcVerdict::ViolationCandidate
                       ? "violation-candidate"
                       : "consistent-with-uniqueness";
    return j.dump(2) + "\n";
}

std::string vanishing_report_json(const VanishingOrderReport& rep) {
    json j;
    j["x0"] = num(rep.x0);
    j["radii"] = num_list(rep.radii);
    j["masses"] = num_list(rep.masses);
    j["slope"] = num(rep.slope);
    j["fit_residual"] = num(rep.fit_residual);
    j["infinite_order"] = rep.infinite_order;
    return j.dump(2) + "\n";
}

std::string manifest_json(const RunConfig& cfg) {
    json j;
    j["format"] = "bolab-manifest";
    j["version"] = 1;
    j["config"] = print_config(cfg);
    return j.dump(2) + "\n";
}

RunConfig config_from_manifest(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed manifest: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "bolab-manifest")
        throw ValidationError("not a manifest file");
    if (j.value("version", 0) != 1)
        throw ValidationError("unsupported manifest version");
    if (!j.contains("config") || !j["config"].is_string())
        throw ValidationError("manifest is missing its config");
    return parse_config(j["config"].get<std::string>());
}

} // namespace bolab
