#include "bolab/integrator.hpp"

#include <cmath>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

// Per-run context: the dispersive symbol and its half/full-step propagators.
class IfStepper {
public:
    IfStepper(const TorusGrid& g, const EquationSpec& spec, double dt)
        : grid_(g), spec_(spec), dt_(dt), e_half_(g.size(), 1.0), e_full_(g.size(), 1.0) {
        if (!(dt > 0.0) || !std::isfinite(dt))
            throw ValidationError("time step must be positive and finite");
        if (spec.has_constant_symbol()) {
            const MultiplierSymbol lam = linear_symbol(spec);
            for (int i = 0; i < g.size(); ++i) {
                complexd l = lam.eval(g.wavenumber(i));
                if (i == g.nyquist_index()) l = 0.0;   // odd-imaginary convention
                max_symbol_ = std::max(max_symbol_, std::abs(l));
                e_half_[i] = std::exp(0.5 * dt * l);
                e_full_[i] = e_half_[i] * e_half_[i];
            }
        }
    }

    double max_symbol() const { return max_symbol_; }

    SimState step(const SimState& s) const {
        const int n = grid_.size();
        const double t = s.t, dt = dt_;
        const auto& uh = s.u.spectrum();

        const auto n1 = eval_nonlinear(s.u, t);
        std::vector<complexd> stage(n);
        for (int i = 0; i < n; ++i) stage[i] = e_half_[i] * (uh[i] + 0.5 * dt * n1[i]);
        const Field a = materialize(stage, t);

        const auto n2 = eval_nonlinear(a, t + 0.5 * dt);
        for (int i = 0; i < n; ++i) stage[i] = e_half_[i] * uh[i] + 0.5 * dt * n2[i];
        const Field b = materialize(stage, t);

        const auto n3 = eval_nonlinear(b, t + 0.5 * dt);
        for (int i = 0; i < n; ++i)
            stage[i] = e_full_[i] * uh[i] + dt * e_half_[i] * n3[i];
        const Field c = materialize(stage, t);

        const auto n4 = eval_nonlinear(c, t + dt);
        std::vector<complexd> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = e_full_[i] * uh[i] +
                      dt / 6.0 *
                          (e_full_[i] * n1[i] + 2.0 * e_half_[i] * (n2[i] + n3[i]) + n4[i]);

        Field u_next = Field::from_spectrum(grid_, std::move(next));
        const double tn = t + dt;
        if (!u_next.finite() || u_next.sup_norm() >= kBlowupCeiling) blowup(tn);
        return SimState{std::move(u_next), tn};
    }

private:
    std::vector<complexd> eval_nonlinear(const Field& u, double t) const {
        return nonlinear_spectrum(spec_, u, t);
    }

    Field materialize(const std::vector<complexd>& spec, double t) const {
        Field f = Field::from_spectrum(grid_, spec);
        if (!f.finite()) blowup(t);
        return f;
    }

    [[noreturn]] void blowup(double t) const {
        std::ostringstream os;
        os << "blowup at t = " << t;
        throw BlowupError(os.str(), t);
    }

    TorusGrid grid_;
    EquationSpec spec_;
    double dt_;
    double max_symbol_ = 0.0;
    std::vector<complexd> e_half_, e_full_;
};

} // namespace

SimState ifrk4_step(const SimState& state, double dt, const EquationSpec& spec) {
    return IfStepper(state.u.grid(), spec, dt).step(state);
}

Trajectory run(const Field& u0, const EquationSpec& spec, const IntegratorConfig& cfg) {
    if (cfg.snapshot_stride < 1)
        throw ValidationError("snapshot stride must be a positive integer");
    if (!(cfg.t_final >= 0.0) || !std::isfinite(cfg.t_final))
        throw ValidationError("t_final must be nonnegative and finite");

    Trajectory traj;
    constexpr double kTailWarn = 1e-6;
    bool tail_warned = false;

    auto record = [&](const SimState& s) {
        traj.snapshots.push_back(s);
        traj.diagnostics.push_back(diagnostics(s, spec));
        if (!tail_warned && traj.diagnostics.back().tail_fraction > kTailWarn) {
            std::ostringstream os;
            os << "resolution warning: spectral tail fraction "
               << traj.diagnostics.back().tail_fraction << " at t = " << s.t
               << " exceeds " << kTailWarn;
            traj.warnings.push_back(os.str());
            tail_warned = true;
        }
    };

    SimState state{u0, 0.0};
    record(state);
    if (cfg.t_final == 0.0) return traj;
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
        throw ValidationError("time step must be positive and finite");

    IfStepper stepper(u0.grid(), spec, cfg.dt);
    if (stepper.max_symbol() > 0.0) {
        const double bound = cfg.cfl_safety / stepper.max_symbol();
        if (cfg.dt > bound) {
            std::ostringstream os;
            os << "dt = " << cfg.dt << " exceeds the phase-accuracy heuristic "
               << bound << " (cfl_safety/max|symbol|); dispersive phases are still "
               << "advanced exactly, accuracy is limited by the nonlinear term";
            traj.warnings.push_back(os.str());
        }
    }

    // Steps of cfg.dt; the remainder, if any, is taken as one shortened step.
    const double total = cfg.t_final;
    const long long full_steps = static_cast<long long>(std::floor(total / cfg.dt + 1e-9));
    const double remainder = total - full_steps * cfg.dt;

    try {
        for (long long s = 1; s <= full_steps; ++s) {
            state = stepper.step(state);
            state.t = s * cfg.dt;   // avoid accumulated rounding in the clock
            if (s % cfg.snapshot_stride == 0 && !(s == full_steps && remainder <= 0.0))
                record(state);
        }
        if (remainder > 0.0) {
            state = ifrk4_step(state, remainder, spec);
            state.t = total;
        }
        record(state);
    } catch (const BlowupError& e) {
        traj.blew_up = true;
        traj.blowup_time = e.time;
        traj.warnings.push_back(e.what());
    }
    return traj;
}

} // namespace bolab
