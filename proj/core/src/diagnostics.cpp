#include "bolab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bolab/errors.hpp"

namespace bolab {

DiagnosticsRecord diagnostics(const SimState& state, const EquationSpec& spec) {
    const Field& u = state.u;
    const TorusGrid& g = u.grid();
    DiagnosticsRecord r;
    r.t = state.t;
    r.mass = u.mass();
    r.l2 = u.l2_norm();
    r.sup = u.sup_norm();

    const auto& uh = u.spectrum();
    double total = 0.0, tail = 0.0, hs = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double e = std::norm(uh[i]);
        total += e;
        hs += (1.0 + std::abs(g.wavenumber(i))) * e;
        if (3 * std::abs(g.mode_number(i)) > g.size()) tail += e;
    }
    r.sobolev_half = std::sqrt(hs / g.length());
    r.tail_fraction = total > 0.0 ? tail / total : 0.0;

    const bool bo_like = spec.model() == Model::BO ||
                         (spec.model() == Model::GBO && spec.power() == 2);
    if (bo_like) {
        const double cubic_coeff = spec.model() == Model::BO ? 1.0 / 6.0 : 1.0 / 3.0;
        const Field hux = hilbert(derivative(u, 1));
        double quad = 0.0, cubic = 0.0;
        for (int j = 0; j < g.size(); ++j) {
            quad += u[j] * hux[j];
            cubic += u[j] * u[j] * u[j];
        }
        r.hamiltonian = 0.5 * quad * g.spacing() - cubic_coeff * cubic * g.spacing();
    }
    return r;
}

namespace {

void check_window(const TorusGrid& g, double a, double b) {
    if (!(a < b)) throw ValidationError("window requires a < b");
    if (a < -0.5 * g.length() || b >= 0.5 * g.length())
        throw ValidationError("window must lie inside [-L/2, L/2)");
}

double window_sum(const Field& u, double a, double b) {
    const TorusGrid& g = u.grid();
    double s = 0.0;
    int count = 0;
    for (int j = 0; j < g.size(); ++j) {
        const double x = g.point(j);
        if (x >= a && x <= b) {
            s += u[j] * u[j];
            ++count;
        }
    }
    if (count == 0) throw ValidationError("window contains no grid points");
    return s * g.spacing();
}

} // namespace

double windowed_mass(const Field& u, double a, double b) {
    check_window(u.grid(), a, b);
    return window_sum(u, a, b);
}

VanishingOrderReport vanishing_order_fit(const Field& g, double x0,
                                         std::vector<double> radii) {
    const TorusGrid& grid = g.grid();
    if (radii.size() < 4)
        throw ValidationError("vanishing-order fit needs at least 4 radii");
    std::sort(radii.begin(), radii.end(), std::greater<>());
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (radii[i] == radii[i + 1])
            throw ValidationError("vanishing-order radii must be distinct");
    const double hmin = 4.0 * grid.spacing();
    for (double R : radii) {
        if (R < hmin)
            throw ValidationError("radius below resolvable scale (need R >= 4h)");
        if (x0 - R < -0.5 * grid.length() || x0 + R >= 0.5 * grid.length())
            throw ValidationError("vanishing-order window leaves the domain");
    }

    VanishingOrderReport rep;
    rep.x0 = x0;
    rep.radii = radii;
    rep.masses.reserve(radii.size());
    for (double R : radii) rep.masses.push_back(window_sum(g, x0 - R, x0 + R));

    if (std::all_of(rep.masses.begin(), rep.masses.end(),
                    [](double m) { return m == 0.0; })) {
        rep.infinite_order = true;
        rep.slope = std::numeric_limits<double>::infinity();
        return rep;
    }
    if (std::any_of(rep.masses.begin(), rep.masses.end(),
                    [](double m) { return m == 0.0; }))
        throw ValidationError(
            "mass vanishes at some radii but not all; shrink the radius range");

    // least squares on (log R, log M)
    const size_t m = radii.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        const double lx = std::log(rep.radii[i]);
        const double ly = std::log(rep.masses[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const double denom = m * sxx - sx * sx;
    rep.slope = (m * sxy - sx * sy) / denom;
    const double intercept = (sy - rep.slope * sx) / m;
    double rss = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double pred = rep.slope * std::log(rep.radii[i]) + intercept;
        const double res = std::log(rep.masses[i]) - pred;
        rss += res * res;
    }
    rep.fit_residual = std::sqrt(rss / m);
    return rep;
}

} // namespace bolab
