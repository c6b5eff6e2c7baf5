#pragma once

#include "bolab/integrator.hpp"

namespace bolab {

// Independent consistency oracle: plug a discrete trajectory back into the
// equation. Returns
//
//   max over interior snapshots of  || D_t u - rhs(u) ||_L2 / ||u||_L2,
//
// where D_t is the 4th-order central difference in t (matching the
// integrator's order) when at least five snapshots are available, and the
// 2nd-order central difference for three or four. Snapshots must be uniformly
// spaced in time; fewer than three is an error. The rhs is evaluated
// spectrally, so for resolved fields the reported number is dominated by the
// time-discretization of whatever produced the snapshots — which is exactly
// what makes it independent of the integrator.
double residual(const std::vector<SimState>& snapshots, const EquationSpec& spec);
double residual(const Trajectory& traj, const EquationSpec& spec);

} // namespace bolab
