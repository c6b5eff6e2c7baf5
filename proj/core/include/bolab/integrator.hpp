#pragma once

#include <string>
#include <vector>

#include "bolab/diagnostics.hpp"
#include "bolab/equation.hpp"

namespace bolab {

// Fixed-step integrating-factor RK4. The constant-coefficient dispersive part
// is advanced exactly by e^{dt Lambda}; classical RK4 handles the transformed
// nonlinearity, so the overall order is 4 and purely linear problems incur no
// time-stepping error at all. general_linear has no constant symbol and falls
// back to Lambda = 0, i.e. a fully explicit RK4 that needs a genuinely small
// dt for stiff dispersive coefficients.
struct IntegratorConfig {
    double dt = 1e-3;
    double t_final = 1.0;
    int snapshot_stride = 1;      // record every this-many steps (plus the final state)
    double cfl_safety = 0.5;      // warning threshold factor, never rejects
};

struct Trajectory {
    std::vector<SimState> snapshots;             // snapshots.front() is the initial state
    std::vector<DiagnosticsRecord> diagnostics;  // one record per snapshot
    bool blew_up = false;
    double blowup_time = 0.0;
    std::vector<std::string> warnings;
};

// One step of length dt from the given state. Throws BlowupError if any stage
// leaves the finite regime or the result exceeds the sup-norm ceiling.
SimState ifrk4_step(const SimState& state, double dt, const EquationSpec& spec);

// March from u0 at t = 0 to t_final (final step shortened to land exactly).
// On blowup the partial trajectory is returned with the flag set rather than
// throwing. t_final = 0 yields just the initial snapshot. A resolution warning
// is recorded when any snapshot holds more than 1e-6 of its energy in the
// unresolved top third of the spectrum.
Trajectory run(const Field& u0, const EquationSpec& spec, const IntegratorConfig& cfg);

} // namespace bolab
