#include "bolab/limit_study.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

// Run to exactly t_final recording only the endpoints.
Trajectory run_endpoints(const Field& u0, const EquationSpec& spec, double t_final,
                         const IntegratorConfig& cfg) {
    IntegratorConfig local = cfg;
    local.t_final = t_final;
    local.snapshot_stride = std::numeric_limits<int>::max();
    return run(u0, spec, local);
}

void absorb(LimitStudyReport& rep, const Trajectory& traj, double delta,
            const char* stage) {
    for (const std::string& w : traj.warnings) {
        std::ostringstream os;
        os << stage;
        if (delta > 0.0) os << " (delta = " << delta << ")";
        os << ": " << w;
        rep.warnings.push_back(os.str());
    }
    if (traj.blew_up) rep.any_blowup = true;
}

double relative_l2(const Field& a, const Field& ref) {
    const double denom = ref.l2_norm();
    const double diff = (a - ref).l2_norm();
    return denom > 0.0 ? diff / denom : diff;
}

void finish(LimitStudyReport& rep) {
    bool clean = !rep.any_blowup;
    for (double e : rep.errors)
        if (!std::isfinite(e)) clean = false;

    if (clean && rep.errors.size() >= 2) {
        bool dec = true;
        for (std::size_t i = 1; i < rep.errors.size(); ++i)
            if (!(rep.errors[i] < rep.errors[i - 1])) dec = false;
        rep.monotone_decreasing = dec;
    }
    if (clean && rep.errors.size() >= 2) {
        // Least-squares slope of log e against log delta; skip exact zeros
        // (T = 0 or the zero datum), where no rate is defined.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (std::size_t i = 0; i < rep.errors.size(); ++i) {
            if (!(rep.errors[i] > 0.0)) continue;
            const double lx = std::log(rep.deltas[i]), ly = std::log(rep.errors[i]);
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            ++m;
        }
        if (m >= 2 && m * sxx - sx * sx > 0.0)
            rep.fitted_rate = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
}

void check_deltas(const std::vector<double>& deltas, bool increasing) {
    if (deltas.empty()) throw ValidationError("delta list must not be empty");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0) || !std::isfinite(deltas[i]))
            throw ValidationError("deltas must be positive and finite");
        if (i > 0) {
            const bool ok = increasing ? deltas[i] > deltas[i - 1] : deltas[i] < deltas[i - 1];
            if (!ok)
                throw ValidationError(increasing
                                          ? "deep-water deltas must be strictly increasing"
                                          : "shallow-water deltas must be strictly decreasing");
        }
    }
}

} // namespace

LimitStudyReport deep_water_study(const Field& u0, const std::vector<double>& deltas,
                                  double T, const IntegratorConfig& cfg) {
    check_deltas(deltas, /*increasing=*/true);
    if (!(T >= 0.0) || !std::isfinite(T))
        throw ValidationError("comparison time must be nonnegative and finite");

    LimitStudyReport rep;
    rep.pair = "ilw->bo (deep water)";
    rep.deltas = deltas;
    rep.rescaling_note = "none: same datum, same clock; the limit is delta -> infinity";

    const Trajectory ref = run_endpoints(u0, EquationSpec::bo(), T, cfg);
    absorb(rep, ref, 0.0, "reference");
    const Field& target = ref.snapshots.back().u;

    for (double d : deltas) {
        const Trajectory traj = run_endpoints(u0, EquationSpec::ilw(d), T, cfg);
        absorb(rep, traj, d, "sweep");
        rep.errors.push_back(traj.blew_up || ref.blew_up
                                 ? std::numeric_limits<double>::quiet_NaN()
                                 : relative_l2(traj.snapshots.back().u, target));
    }
    finish(rep);
    return rep;
}

LimitStudyReport shallow_water_study(const Field& u0, const std::vector<double>& deltas,
                                     double T, const IntegratorConfig& cfg) {
    check_deltas(deltas, /*increasing=*/false);
    if (!(T >= 0.0) || !std::isfinite(T))
        throw ValidationError("comparison time must be nonnegative and finite");

    LimitStudyReport rep;
    rep.pair = "ilw->kdv (shallow water)";
    rep.deltas = deltas;
    rep.rescaling_note =
        "rescaling inverted at t = 0: sweep datum (2 delta/3) u0, horizon (3/delta) T, "
        "final profile multiplied by 3/(2 delta), compared against the unmodified "
        "reference run at time T";

    const Trajectory ref = run_endpoints(u0, EquationSpec::kdv(), T, cfg);
    absorb(rep, ref, 0.0, "reference");
    const Field& target = ref.snapshots.back().u;

    for (double d : deltas) {
        const Field v0 = (2.0 * d / 3.0) * u0;
        const Trajectory traj = run_endpoints(v0, EquationSpec::ilw(d), (3.0 / d) * T, cfg);
        absorb(rep, traj, d, "sweep");
        if (traj.blew_up || ref.blew_up) {
            rep.errors.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            const Field rescaled = (3.0 / (2.0 * d)) * traj.snapshots.back().u;
            rep.errors.push_back(relative_l2(rescaled, target));
        }
    }
    finish(rep);
    return rep;
}

} // namespace bolab
