#pragma once

#include <optional>

#include "bolab/equation.hpp"

namespace bolab {

// Scalar health indicators of a state. hamiltonian is present for bo and
// gbo(k=2) only: (1/2) sum u (H d_x u) h - C sum u^3 h with C = 1/6 for bo
// and C = 1/3 for gbo(k=2), the coefficient each flow actually conserves.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;                  // sum u h
    double l2 = 0.0;                    // (sum u^2 h)^{1/2}
    std::optional<double> hamiltonian;
    double sobolev_half = 0.0;          // (sum (1+|xi|) |u_hat|^2 / L)^{1/2}
    double tail_fraction = 0.0;         // energy share of modes with 3|k| > n
    double sup = 0.0;
};

DiagnosticsRecord diagnostics(const SimState& state, const EquationSpec& spec);

// sum of u^2 h over grid points with a <= x_j <= b. The window must lie inside
// [-L/2, L/2) and contain at least one point.
double windowed_mass(const Field& u, double a, double b);

// Least-squares slope of log M(R) against log R, where M(R) is the windowed
// mass of g on [x0-R, x0+R]. A field vanishing to order m at x0 gives slope
// 2m+1. Radii must be distinct, resolvable (R >= 4h), at least four, and keep
// the window inside the domain; they are stored largest-first.
struct VanishingOrderReport {
    double x0 = 0.0;
    std::vector<double> radii;      // descending
    std::vector<double> masses;
    double slope = 0.0;             // +inf when every mass vanishes
    double fit_residual = 0.0;      // rms residual of the log-log fit
    bool infinite_order = false;    // all masses exactly zero
};

VanishingOrderReport vanishing_order_fit(const Field& g, double x0,
                                         std::vector<double> radii);

} // namespace bolab
