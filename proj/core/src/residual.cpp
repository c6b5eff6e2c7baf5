#include "bolab/residual.hpp"

#include <cmath>
#include <cstddef>

#include "bolab/errors.hpp"

namespace bolab {

double residual(const std::vector<SimState>& snaps, const EquationSpec& spec) {
    const std::size_t m = snaps.size();
    if (m < 3) throw ValidationError("residual needs at least 3 snapshots");

    const double dt = snaps[1].t - snaps[0].t;
    if (!(dt > 0.0)) throw ValidationError("snapshots must be strictly increasing in time");
    for (std::size_t i = 1; i < m; ++i) {
        const double step = snaps[i].t - snaps[i - 1].t;
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw ValidationError("residual needs uniformly spaced snapshots");
        if (snaps[i].u.grid() != snaps[0].u.grid())
            throw ValidationError("all snapshots must share one grid");
    }

    const bool fourth = m >= 5;
    const std::size_t lo = fourth ? 2 : 1;
    const std::size_t hi = m - 1 - lo;   // inclusive

    double worst = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        const Field dudt =
            fourth ? (1.0 / (12.0 * dt)) * (8.0 * (snaps[i + 1].u - snaps[i - 1].u) -
                                            (snaps[i + 2].u - snaps[i - 2].u))
                   : (1.0 / (2.0 * dt)) * (snaps[i + 1].u - snaps[i - 1].u);
        const Field defect = dudt - rhs(spec, snaps[i]);
        const double denom = snaps[i].u.l2_norm();
        if (denom == 0.0) continue;   // a zero field contributes nothing meaningful
        worst = std::max(worst, defect.l2_norm() / denom);
    }
    return worst;
}

double residual(const Trajectory& traj, const EquationSpec& spec) {
    return residual(traj.snapshots, spec);
}

} // namespace bolab
