#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <vector>

#include "bolab/grid.hpp"

namespace bolab {

using complexd = std::complex<double>;

// Spectrum convention (integral normalization):
//
//   u_hat(xi_k) = h * sum_j u(x_j) e^{-2 pi i xi_k x_j}   ~  FT of u over one period,
//   u(x_j)      = (1/L) * sum_k u_hat(xi_k) e^{+2 pi i xi_k x_j}.
//
// With x_0 = -L/2 this differs from the raw DFT by the phase (-1)^i per stored
// mode (e^{-2 pi i (k/L)(-L/2)} = (-1)^k). Parseval: sum_j u_j^2 h = sum_k |u_hat_k|^2 / L.
//
// Fields are immutable once constructed; the spectrum is computed on first use and
// cached (thread-safe, the cache is shared between copies).

namespace detail {
std::vector<complexd> spectrum_of(const TorusGrid& g, const std::vector<double>& samples);
std::vector<complexd> spectrum_of(const TorusGrid& g, const std::vector<complexd>& samples);
std::vector<complexd> samples_from_spectrum(const TorusGrid& g, const std::vector<complexd>& spectrum);
// Projects onto conjugate-symmetric spectra (real fields): averages the (k, -k)
// pairs and drops the imaginary parts of the self-paired DC and Nyquist bins.
void hermitian_symmetrize(const TorusGrid& g, std::vector<complexd>& spectrum);
} // namespace detail

class Field {
public:
    Field(TorusGrid grid, std::vector<double> samples);

    static Field zero(const TorusGrid& grid);
    template <class F>
    static Field sampled(const TorusGrid& grid, F&& f) {
        std::vector<double> s(grid.size());
        for (int j = 0; j < grid.size(); ++j) s[j] = f(grid.point(j));
        return Field(grid, std::move(s));
    }
    // Hermitian-symmetrizes the given coefficients, inverse-transforms, and keeps
    // the symmetrized spectrum cached so no information is recomputed.
    static Field from_spectrum(const TorusGrid& grid, std::vector<complexd> spectrum);

    const TorusGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& samples() const noexcept { return samples_; }
    double operator[](int j) const noexcept { return samples_[j]; }

    const std::vector<complexd>& spectrum() const;

    double l2_norm() const;       // sqrt(sum u^2 h)
    double sup_norm() const;
    double mass() const;          // sum u h
    bool finite() const;

private:
    struct SpectrumCache {
        std::once_flag once;
        std::vector<complexd> values;
    };

    TorusGrid grid_;
    std::vector<double> samples_;
    std::shared_ptr<SpectrumCache> cache_;
};

class ComplexField {
public:
    ComplexField(TorusGrid grid, std::vector<complexd> samples);

    static ComplexField from_spectrum(const TorusGrid& grid, std::vector<complexd> spectrum);

    const TorusGrid& grid() const noexcept { return grid_; }
    const std::vector<complexd>& samples() const noexcept { return samples_; }
    complexd operator[](int j) const noexcept { return samples_[j]; }

    const std::vector<complexd>& spectrum() const;

    double l2_norm() const;
    double sup_norm() const;

private:
    struct SpectrumCache {
        std::once_flag once;
        std::vector<complexd> values;
    };

    TorusGrid grid_;
    std::vector<complexd> samples_;
    std::shared_ptr<SpectrumCache> cache_;
};

ComplexField to_complex(const Field& f);

// Pointwise algebra; operands must share one grid.
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(const Field& a, const Field& b);   // pointwise product
Field operator*(double s, const Field& a);

double inner_product(const Field& a, const Field& b);   // sum a b h

} // namespace bolab
