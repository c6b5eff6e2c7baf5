#include "bolab/multiplier.hpp"

#include <cmath>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

std::vector<complexd> evaluate_symbol(const TorusGrid& g, const MultiplierSymbol& m) {
    if (!m.eval) throw ValidationError("multiplier symbol has no evaluator");
    const int n = g.size();
    std::vector<complexd> vals(n);
    for (int i = 0; i < n; ++i) {
        const double xi = g.wavenumber(i);
        const complexd v = m.eval(xi);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream os;
            os << "singular symbol at xi = " << xi;
            throw ValidationError(os.str());
        }
        vals[i] = v;
    }
    if (m.parity == SymbolParity::OddImaginary) vals[g.nyquist_index()] = 0.0;
    return vals;
}

} // namespace

Field apply_multiplier(const Field& u, const MultiplierSymbol& m) {
    if (m.parity == SymbolParity::General)
        throw ValidationError(
            "a symbol of general parity may not preserve realness; "
            "apply it to a ComplexField instead");
    const auto vals = evaluate_symbol(u.grid(), m);
    std::vector<complexd> spec(u.spectrum());
    for (size_t i = 0; i < spec.size(); ++i) spec[i] *= vals[i];
    return Field::from_spectrum(u.grid(), std::move(spec));
}

ComplexField apply_multiplier(const ComplexField& u, const MultiplierSymbol& m) {
    const auto vals = evaluate_symbol(u.grid(), m);
    std::vector<complexd> spec(u.spectrum());
    for (size_t i = 0; i < spec.size(); ++i) spec[i] *= vals[i];
    return ComplexField::from_spectrum(u.grid(), std::move(spec));
}

double signum(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

MultiplierSymbol hilbert_symbol() {
    return {[](double xi) { return complexd(0.0, -signum(xi)); },
            SymbolParity::OddImaginary};
}

Field hilbert(const Field& u) { return apply_multiplier(u, hilbert_symbol()); }

MultiplierSymbol derivative_symbol(int order) {
    if (order < 0 || order > 4)
        throw ValidationError("derivative order must be in [0, 4], got " +
                              std::to_string(order));
    const SymbolParity parity =
        (order % 2 == 0) ? SymbolParity::EvenReal : SymbolParity::OddImaginary;
    return {[order](double xi) {
                return std::pow(complexd(0.0, 2.0 * M_PI * xi), order);
            },
            parity};
}

Field derivative(const Field& u, int order) {
    return apply_multiplier(u, derivative_symbol(order));
}

double coth(double z) {
    const double a = std::abs(z);
    // 1 - e^{-2a} via expm1: full relative precision both as a -> 0 and a -> inf.
    const double c = 1.0 + 2.0 * std::exp(-2.0 * a) / (-std::expm1(-2.0 * a));
    return z > 0 ? c : -c;
}

MultiplierSymbol ilw_symbol(double delta, IlwMode mode) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw ValidationError("ilw depth parameter must be positive and finite");
    switch (mode) {
    case IlwMode::L:
        return {[delta](double xi) {
                    if (xi == 0.0) return complexd(0.0, 0.0);
                    return complexd(0.0, -coth(2.0 * M_PI * delta * xi));
                },
                SymbolParity::OddImaginary};
    case IlwMode::LDx:
        return {[delta](double xi) {
                    if (xi == 0.0) return complexd(1.0 / delta, 0.0);
                    return complexd(2.0 * M_PI * xi * coth(2.0 * M_PI * delta * xi), 0.0);
                },
                SymbolParity::EvenReal};
    case IlwMode::LDxx:
        return {[delta](double xi) {
                    if (xi == 0.0) return complexd(0.0, 0.0);
                    const double w = 2.0 * M_PI * xi;
                    return complexd(0.0, w * w * coth(2.0 * M_PI * delta * xi));
                },
                SymbolParity::OddImaginary};
    }
    throw ValidationError("unknown ilw mode");
}

Field ilw_apply(const Field& u, double delta, IlwMode mode) {
    return apply_multiplier(u, ilw_symbol(delta, mode));
}

std::vector<complexd> dealias_spectrum(const TorusGrid& g, std::vector<complexd> spec) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        if (3 * std::abs(g.mode_number(i)) > n) spec[i] = 0.0;
    return spec;
}

Field dealias(const Field& u) {
    return Field::from_spectrum(u.grid(), dealias_spectrum(u.grid(), u.spectrum()));
}

Field translate(const Field& u, double shift) {
    const TorusGrid& g = u.grid();
    std::vector<complexd> spec(u.spectrum());
    for (int i = 0; i < g.size(); ++i) {
        const double th = -2.0 * M_PI * g.wavenumber(i) * shift;
        spec[i] *= complexd(std::cos(th), std::sin(th));
    }
    return Field::from_spectrum(g, std::move(spec));
}

} // namespace bolab
