#include "bolab/equation.hpp"

#include <cmath>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

EquationSpec EquationSpec::bo() {
    EquationSpec s;
    s.model_ = Model::BO;
    return s;
}

EquationSpec EquationSpec::gbo(int power) {
    if (power < 2)
        throw ValidationError("gbo power must be >= 2, got " + std::to_string(power));
    EquationSpec s;
    s.model_ = Model::GBO;
    s.power_ = power;
    return s;
}

EquationSpec EquationSpec::bh() {
    EquationSpec s;
    s.model_ = Model::BH;
    return s;
}

EquationSpec EquationSpec::ilw(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw ValidationError("ilw requires a positive finite delta");
    EquationSpec s;
    s.model_ = Model::ILW;
    s.delta_ = delta;
    return s;
}

EquationSpec EquationSpec::kdv() {
    EquationSpec s;
    s.model_ = Model::KDV;
    return s;
}

EquationSpec EquationSpec::general_linear(GeneralLinearTerms terms) {
    if (terms.hilbert_order < 0 || terms.hilbert_order > 4)
        throw ValidationError("general_linear dispersive order must be in [0, 4]");
    if (!terms.b) throw ValidationError("general_linear requires a coefficient b");
    if (terms.a.size() > 5)
        throw ValidationError("general_linear supports derivative orders 0..4");
    EquationSpec s;
    s.model_ = Model::GeneralLinear;
    s.terms_ = std::move(terms);
    return s;
}

std::string EquationSpec::name() const {
    switch (model_) {
    case Model::BO: return "bo";
    case Model::GBO: return "gbo(k=" + std::to_string(power_) + ")";
    case Model::BH: return "bh";
    case Model::ILW: {
        std::ostringstream os;
        os << "ilw(delta=" << delta_ << ")";
        return os.str();
    }
    case Model::KDV: return "kdv";
    case Model::GeneralLinear: return "general_linear";
    }
    return "?";
}

MultiplierSymbol linear_symbol(const EquationSpec& spec) {
    switch (spec.model()) {
    case Model::BO:
    case Model::GBO:
        // sigma(H d_xx) = (-i sgn)(2 pi i xi)^2 = 4 pi^2 i xi^2 sgn(xi)
        return {[](double xi) {
                    const double w = 2.0 * M_PI * xi;
                    return complexd(0.0, w * w * signum(xi));
                },
                SymbolParity::OddImaginary};
    case Model::BH:
        return hilbert_symbol();
    case Model::ILW: {
        const double d = spec.delta();
        // sigma(L_d d_xx) - (1/d) sigma(d_x); both singular parts cancel at 0.
        return {[d](double xi) {
                    if (xi == 0.0) return complexd(0.0, 0.0);
                    const double w = 2.0 * M_PI * xi;
                    return complexd(0.0, w * w * coth(2.0 * M_PI * d * xi) - w / d);
                },
                SymbolParity::OddImaginary};
    }
    case Model::KDV:
        // -(2 pi i xi)^3 = (2 pi xi)^3 i
        return {[](double xi) {
                    const double w = 2.0 * M_PI * xi;
                    return complexd(0.0, w * w * w);
                },
                SymbolParity::OddImaginary};
    case Model::GeneralLinear:
        throw ValidationError("general_linear has no constant-coefficient symbol");
    }
    throw ValidationError("unknown model");
}

namespace {

void check_state(const Field& u) {
    if (!u.finite()) throw ValidationError("state contains non-finite samples");
}

// -dealias(u * d_x u)
std::vector<complexd> advection_spectrum(const Field& u) {
    const Field ux = derivative(u, 1);
    const Field w = u * ux;
    auto spec = dealias_spectrum(u.grid(), w.spectrum());
    for (auto& c : spec) c = -c;
    return spec;
}

// -d_x dealias(u^power)
std::vector<complexd> divergence_power_spectrum(const Field& u, int power) {
    const TorusGrid& g = u.grid();
    std::vector<double> p(u.samples());
    for (double& v : p) v = std::pow(v, power);
    Field up(g, std::move(p));
    auto spec = dealias_spectrum(g, up.spectrum());
    for (int i = 0; i < g.size(); ++i)
        spec[i] *= complexd(0.0, -2.0 * M_PI * g.wavenumber(i));
    spec[g.nyquist_index()] = 0.0;
    return spec;
}

std::vector<complexd> general_linear_spectrum(const EquationSpec& spec, const Field& u,
                                              double t) {
    const TorusGrid& g = u.grid();
    const GeneralLinearTerms& gl = spec.terms();
    const int n = g.size();

    std::vector<double> b_vals(n);
    for (int j = 0; j < n; ++j) {
        b_vals[j] = gl.b(g.point(j), t);
        if (b_vals[j] == 0.0) {
            std::ostringstream os;
            os << "degenerate coefficient: b(" << g.point(j) << ", " << t << ") = 0";
            throw ValidationError(os.str());
        }
    }

    const Field disp = hilbert(derivative(u, gl.hilbert_order));
    std::vector<double> acc(n);
    for (int j = 0; j < n; ++j) acc[j] = b_vals[j] * disp[j];

    std::vector<complexd> out =
        dealias_spectrum(g, Field(g, std::move(acc)).spectrum());

    for (size_t m = 0; m < gl.a.size(); ++m) {
        if (!gl.a[m]) continue;
        const Field dm = derivative(u, static_cast<int>(m));
        std::vector<double> term(n);
        for (int j = 0; j < n; ++j) term[j] = gl.a[m](g.point(j), t) * dm[j];
        auto ts = dealias_spectrum(g, Field(g, std::move(term)).spectrum());
        for (int i = 0; i < n; ++i) out[i] -= ts[i];
    }
    return out;
}

} // namespace

std::vector<complexd> nonlinear_spectrum(const EquationSpec& spec, const Field& u,
                                         double t) {
    check_state(u);
    switch (spec.model()) {
    case Model::BO:
    case Model::BH:
    case Model::ILW:
        return advection_spectrum(u);
    case Model::GBO:
        return divergence_power_spectrum(u, spec.power());
    case Model::KDV:
        return divergence_power_spectrum(u, 2);
    case Model::GeneralLinear:
        return general_linear_spectrum(spec, u, t);
    }
    throw ValidationError("unknown model");
}

Field rhs(const EquationSpec& spec, const SimState& state) {
    check_state(state.u);
    std::vector<complexd> total = nonlinear_spectrum(spec, state.u, state.t);
    if (spec.has_constant_symbol()) {
        const Field lin = apply_multiplier(state.u, linear_symbol(spec));
        const auto& ls = lin.spectrum();
        for (size_t i = 0; i < total.size(); ++i) total[i] += ls[i];
    }
    return Field::from_spectrum(state.u.grid(), std::move(total));
}

} // namespace bolab
