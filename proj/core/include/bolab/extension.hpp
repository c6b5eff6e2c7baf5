#pragma once

#include <vector>

#include "bolab/multiplier.hpp"

namespace bolab {

// A field extended off the real line: rows[m] holds the complex samples of
// F(x + i heights[m]) over the base grid. HalfPlane extensions live on y >= 0;
// Strip extensions are the coth-dispersion construction, analytic only for
// 0 <= y < 2 delta, and we refuse the outer 5% of that band where the
// negative-frequency amplification defeats double precision.
enum class ExtensionKind { HalfPlane, Strip };

struct ExtensionGrid {
    TorusGrid base;
    std::vector<double> heights;      // strictly increasing, heights[0] == 0
    std::vector<ComplexField> rows;   // rows[m] = F(. + i heights[m])
    ExtensionKind kind = ExtensionKind::HalfPlane;
    double delta = 0.0;               // strip parameter; unused for HalfPlane
};

// f + i hilbert(f). Its spectrum doubles the positive-frequency coefficients,
// kills the negative ones, and leaves the mean (and the Nyquist slot, which
// the Hilbert transform does not touch) unchanged.
ComplexField analytic_signal(const Field& f);

// Harmonic/analytic continuation upward: each positive-frequency coefficient
// of the analytic signal is damped by e^{-2 pi xi y}. The y = 0 row is the
// analytic signal itself; as y grows every oscillatory mode dies and the rows
// approach the mean of f.
ExtensionGrid halfplane_extend(const Field& f, std::vector<double> heights);

// Strip continuation of F = d_x f + i L_delta d_x f, which extends
// analytically to 0 < y < 2 delta. Row y multiplies F-hat(xi) by
// e^{-2 pi xi y}: decaying for xi > 0, growing for xi < 0 but dominated by the
// e^{-2 pi |xi| (2 delta - y)} factor carried by F-hat itself, so every row
// inside the strip stays finite. Heights beyond 95% of 2 delta are rejected.
ExtensionGrid strip_extend_ilw(const Field& f, double delta, std::vector<double> heights);

// Numerical analyticity certificate: max over interior rows of
// |d_x F + i d_y F| / max|F|, with d_x spectral and d_y a 3-point central
// difference (second order, nonuniform-height capable). Needs >= 3 rows.
// O(dy^2) for genuinely analytic extensions; order 1 for non-analytic data.
double cauchy_riemann_residual(const ExtensionGrid& e);

// Unique-continuation probe for the pairs (f, Hf) and (f, L_delta d_x f):
// the underlying theorems say both members cannot vanish on a common open
// interval unless f is identically zero, so a report with both sups below
// tol_zero and a non-trivial L2 norm is a genuine numerical anomaly.
enum class UcPartnerKind { Hilbert, IlwDx };

struct UcPartner {
    UcPartnerKind kind = UcPartnerKind::Hilbert;
    double delta = 1.0;   // used by IlwDx only

    static UcPartner hilbert() { return {UcPartnerKind::Hilbert, 0.0}; }
    static UcPartner ilw_dx(double delta) { return {UcPartnerKind::IlwDx, delta}; }
};

struct UcProbeOptions {
    double tol_zero = 1e-10;   // "numerically zero" threshold for the sups
    double l2_floor = 1e-6;    // below this, f counts as the trivial solution
};

enum class UcVerdict { ConsistentWithUniqueness, ViolationCandidate };

struct UCReport {
    double a = 0.0, b = 0.0;            // probed interval
    double f_sup = 0.0, f_inf = 0.0;    // of |f| over grid points in [a, b]
    double partner_sup = 0.0, partner_inf = 0.0;
    double l2 = 0.0;                    // global L2 norm of f
    UcPartnerKind partner = UcPartnerKind::Hilbert;
    double delta = 0.0;
    UcVerdict verdict = UcVerdict::ConsistentWithUniqueness;
};

// Interval must contain at least 8 grid points.
UCReport uc_probe(const Field& f, double a, double b, UcPartner partner,
                  UcProbeOptions opts = {});

} // namespace bolab
