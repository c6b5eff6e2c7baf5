#pragma once

#include <functional>

#include "bolab/field.hpp"

namespace bolab {

// Symmetry class of a symbol m(xi), used to decide how a real field comes back
// real after multiplication:
//   EvenReal:     m(-xi) =  m(xi), real-valued   (e.g. |2 pi xi|^2)
//   OddImaginary: m(-xi) = -m(xi), imaginary     (e.g. -i sgn xi)
//   General:      anything else; output may be genuinely complex.
//
// The Nyquist mode -n/2 has no +n/2 partner on an even grid, so an odd-imaginary
// symbol cannot act on it without breaking realness; such symbols act as zero
// there (the standard odd-derivative convention). Even-real symbols keep it.
enum class SymbolParity { EvenReal, OddImaginary, General };

struct MultiplierSymbol {
    std::function<complexd(double)> eval;
    SymbolParity parity = SymbolParity::General;
};

// v_hat(xi) = m(xi) u_hat(xi). The Field overload requires a parity that
// preserves realness (EvenReal or OddImaginary); apply a General symbol through
// the ComplexField overload and inspect the result's imaginary part yourself.
// A symbol evaluating to a non-finite value at any grid wavenumber is rejected.
Field apply_multiplier(const Field& u, const MultiplierSymbol& m);
ComplexField apply_multiplier(const ComplexField& u, const MultiplierSymbol& m);

double signum(double x);                       // sgn with sgn(0) = 0
MultiplierSymbol hilbert_symbol();             // -i sgn(xi)
Field hilbert(const Field& u);

// d^order/dx^order, 0 <= order <= 4, symbol (2 pi i xi)^order.
MultiplierSymbol derivative_symbol(int order);
Field derivative(const Field& u, int order = 1);

// Nonlocal dispersion operator with symbol built from coth(2 pi delta xi):
//   L:    -i coth(2 pi delta xi),          0 at xi = 0 (mean annihilated)
//   LDx:  2 pi xi coth(2 pi delta xi),     1/delta at xi = 0
//   LDxx: 4 pi^2 i xi^2 coth(2 pi delta xi), 0 at xi = 0
// The xi = 0 values are the removable-singularity limits from
// coth(z) = 1/z + z/3 + O(z^3).
enum class IlwMode { L, LDx, LDxx };
MultiplierSymbol ilw_symbol(double delta, IlwMode mode);
Field ilw_apply(const Field& u, double delta, IlwMode mode);

// Two-thirds rule: zeroes every mode with 3|k| > n. Idempotent; applied to
// quadratic (and variable-coefficient) products before they re-enter the flow.
Field dealias(const Field& u);
std::vector<complexd> dealias_spectrum(const TorusGrid& g, std::vector<complexd> spectrum);

// u(x - shift), computed spectrally (exact for resolved fields).
Field translate(const Field& u, double shift);

// coth(z) for z != 0, evaluated as 1 + 2 e^{-2|z|}/(1 - e^{-2|z|}) via expm1
// so that coth(z) - 1 is exact to machine precision for large z.
double coth(double z);

} // namespace bolab
