#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bolab/multiplier.hpp"

namespace bolab {

// All equations are posed as d/dt u = linear part + nonlinear part:
//
//   bo:             H d_xx u - u d_x u
//   gbo (power k):  H d_xx u - d_x(u^k)
//   bh:             H u - u d_x u
//   ilw (depth d):  L_d d_xx u - (1/d) d_x u - u d_x u
//   kdv:            -d_xxx u - d_x(u^2)
//   general_linear: b(x,t) H d_x^j w - sum_m a_m(x,t) d_x^m w
//
// H is the Hilbert transform (symbol -i sgn xi), L_d the coth-dispersion
// operator (see multiplier.hpp). Quadratic and variable-coefficient products
// are dealiased with the two-thirds rule. For ilw the (1/d) transport term is
// kept inside the constant-coefficient symbol, so its nonlinear remainder is
// the same -u d_x u as bo.
enum class Model { BO, GBO, BH, ILW, KDV, GeneralLinear };

using Coefficient = std::function<double(double /*x*/, double /*t*/)>;

struct GeneralLinearTerms {
    int hilbert_order = 0;            // j in b H d_x^j, 0 <= j <= 4
    std::vector<Coefficient> a;       // a_0..a_m, m <= 4 (trailing entries may be null)
    Coefficient b;                    // must never vanish on the grid
};

class EquationSpec {
public:
    static EquationSpec bo();
    static EquationSpec gbo(int power);          // power >= 2
    static EquationSpec bh();
    static EquationSpec ilw(double delta);       // delta > 0
    static EquationSpec kdv();
    static EquationSpec general_linear(GeneralLinearTerms terms);

    Model model() const noexcept { return model_; }
    int power() const noexcept { return power_; }
    double delta() const noexcept { return delta_; }
    const GeneralLinearTerms& terms() const { return terms_; }
    bool has_constant_symbol() const noexcept { return model_ != Model::GeneralLinear; }

    std::string name() const;

private:
    EquationSpec() = default;
    Model model_ = Model::BO;
    int power_ = 2;
    double delta_ = 1.0;
    GeneralLinearTerms terms_;
};

struct SimState {
    Field u;
    double t = 0.0;
};

// Dispersive symbol Lambda(xi) of the constant-coefficient linear part
// (purely imaginary for every model). Rejects general_linear.
MultiplierSymbol linear_symbol(const EquationSpec& spec);

// Spectrum of everything rhs contains beyond Lambda u: the dealiased nonlinear
// term, or the full variable-coefficient right-hand side for general_linear.
std::vector<complexd> nonlinear_spectrum(const EquationSpec& spec, const Field& u, double t);

// Full right-hand side d/dt u evaluated at the state. Rejects non-finite states.
Field rhs(const EquationSpec& spec, const SimState& state);

// Hard ceiling on |u| past which a state is declared blown up.
inline constexpr double kBlowupCeiling = 1e8;

} // namespace bolab
