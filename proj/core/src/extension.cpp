#include "bolab/extension.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void check_heights(const std::vector<double>& heights) {
    if (heights.empty()) throw ValidationError("at least one height is required");
    if (heights.front() != 0.0)
        throw ValidationError("heights must start at 0 (the boundary row)");
    for (std::size_t m = 0; m < heights.size(); ++m) {
        if (!std::isfinite(heights[m]) || heights[m] < 0.0)
            throw ValidationError("negative height");
        if (m > 0 && !(heights[m] > heights[m - 1]))
            throw ValidationError("heights must be strictly increasing");
    }
}

} // namespace

ComplexField analytic_signal(const Field& f) {
    const TorusGrid& g = f.grid();
    const auto& fh = f.spectrum();
    std::vector<complexd> out(fh.size());
    for (int i = 0; i < g.size(); ++i) {
        const int k = g.mode_number(i);
        if (i == g.nyquist_index()) out[i] = fh[i];       // no Hilbert action there
        else if (k > 0) out[i] = 2.0 * fh[i];
        else if (k == 0) out[i] = fh[i];
        else out[i] = 0.0;
    }
    return ComplexField::from_spectrum(g, std::move(out));
}

ExtensionGrid halfplane_extend(const Field& f, std::vector<double> heights) {
    check_heights(heights);
    const TorusGrid& g = f.grid();
    const ComplexField boundary = analytic_signal(f);
    const auto& bh = boundary.spectrum();

    ExtensionGrid e{g, {}, {}, ExtensionKind::HalfPlane, 0.0};
    e.rows.reserve(heights.size());
    for (double y : heights) {
        std::vector<complexd> row(bh.size());
        for (int i = 0; i < g.size(); ++i) {
            // |xi| in the damping keeps the (real) Nyquist slot decaying too,
            // so rows still settle on the mean as y grows.
            row[i] = bh[i] * std::exp(-kTwoPi * std::abs(g.wavenumber(i)) * y);
        }
        e.rows.push_back(ComplexField::from_spectrum(g, std::move(row)));
    }
    e.heights = std::move(heights);
    return e;
}

ExtensionGrid strip_extend_ilw(const Field& f, double delta, std::vector<double> heights) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw ValidationError("delta must be positive and finite");
    check_heights(heights);
    const double band = 2.0 * delta;
    for (double y : heights) {
        if (y > 0.95 * band) {
            std::ostringstream os;
            os << "height " << y << " outside strip of analyticity (0, " << band
               << ") or its 95% guard band";
            throw ValidationError(os.str());
        }
    }

    const TorusGrid& g = f.grid();
    const auto& fh = f.spectrum();

    ExtensionGrid e{g, {}, {}, ExtensionKind::Strip, delta};
    e.rows.reserve(heights.size());
    for (double y : heights) {
        std::vector<complexd> row(fh.size());
        for (int i = 0; i < g.size(); ++i) {
            const double xi = g.wavenumber(i);
            complexd factor;
            if (xi == 0.0) {
                // Laurent limit of -4 pi i xi e^{4 pi d xi}/(1 - e^{4 pi d xi}).
                factor = complexd(0.0, 1.0 / delta);
            } else if (xi > 0.0) {
                // e^{4 pi d xi}/(1 - e^{4 pi d xi}) = 1/expm1(-4 pi d xi).
                factor = complexd(0.0, -2.0 * kTwoPi * xi / std::expm1(-2.0 * kTwoPi * delta * xi)) *
                         std::exp(-kTwoPi * xi * y);
            } else {
                // Negative frequencies: pair the growing e^{-2 pi xi y} with the
                // e^{-4 pi d |xi|} decay of F-hat before exponentiating, so the
                // product never overflows inside the strip.
                const double axi = -xi;
                factor = complexd(0.0, -2.0 * kTwoPi * xi *
                                           std::exp(-kTwoPi * axi * (band - y)) /
                                           (-std::expm1(-2.0 * kTwoPi * delta * axi)));
            }
            row[i] = factor * fh[i];
        }
        e.rows.push_back(ComplexField::from_spectrum(g, std::move(row)));
    }
    e.heights = std::move(heights);
    return e;
}

double cauchy_riemann_residual(const ExtensionGrid& e) {
    const std::size_t rows = e.rows.size();
    if (rows < 3) throw ValidationError("cauchy_riemann_residual needs at least 3 rows");
    if (e.heights.size() != rows)
        throw ValidationError("extension grid is inconsistent (heights vs rows)");
    const int n = e.base.size();

    double fmax = 0.0;
    for (const ComplexField& r : e.rows) fmax = std::max(fmax, r.sup_norm());
    if (fmax == 0.0) return 0.0;

    const MultiplierSymbol ddx = derivative_symbol(1);
    double worst = 0.0;
    for (std::size_t m = 1; m + 1 < rows; ++m) {
        const ComplexField fx = apply_multiplier(e.rows[m], ddx);
        const double h1 = e.heights[m] - e.heights[m - 1];
        const double h2 = e.heights[m + 1] - e.heights[m];
        // 3-point central difference on possibly nonuniform heights.
        const double c_lo = -h2 / (h1 * (h1 + h2));
        const double c_mid = (h2 - h1) / (h1 * h2);
        const double c_hi = h1 / (h2 * (h1 + h2));
        for (int j = 0; j < n; ++j) {
            const complexd fy =
                c_lo * e.rows[m - 1][j] + c_mid * e.rows[m][j] + c_hi * e.rows[m + 1][j];
            worst = std::max(worst, std::abs(fx[j] + complexd(0.0, 1.0) * fy));
        }
    }
    return worst / fmax;
}

UCReport uc_probe(const Field& f, double a, double b, UcPartner partner,
                  UcProbeOptions opts) {
    const TorusGrid& g = f.grid();
    if (!(a < b)) throw ValidationError("probe interval must satisfy a < b");

    std::vector<int> idx;
    for (int j = 0; j < g.size(); ++j) {
        const double x = g.point(j);
        if (x >= a && x <= b) idx.push_back(j);
    }
    if (idx.size() < 8)
        throw ValidationError("unresolvable interval: fewer than 8 grid points");

    Field mate = partner.kind == UcPartnerKind::Hilbert
                     ? hilbert(f)
                     : ilw_apply(f, partner.delta, IlwMode::LDx);

    UCReport rep;
    rep.a = a;
    rep.b = b;
    rep.partner = partner.kind;
    rep.delta = partner.kind == UcPartnerKind::IlwDx ? partner.delta : 0.0;
    rep.l2 = f.l2_norm();
    double fsup = 0.0, finf = HUGE_VAL, psup = 0.0, pinf = HUGE_VAL;
    for (int j : idx) {
        fsup = std::max(fsup, std::abs(f[j]));
        finf = std::min(finf, std::abs(f[j]));
        psup = std::max(psup, std::abs(mate[j]));
        pinf = std::min(pinf, std::abs(mate[j]));
    }
    rep.f_sup = fsup;
    rep.f_inf = finf;
    rep.partner_sup = psup;
    rep.partner_inf = pinf;
    rep.verdict = (fsup < opts.tol_zero && psup < opts.tol_zero && rep.l2 > opts.l2_floor)
                      ? UcVerdict::ViolationCandidate
                      : UcVerdict::ConsistentWithUniqueness;
    return rep;
}

} // namespace bolab
