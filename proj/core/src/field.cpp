#include "bolab/field.hpp"

#include <algorithm>
#include <cmath>

#include "bolab/errors.hpp"
#include "bolab/fft.hpp"

namespace bolab {

namespace detail {

namespace {
inline double phase(int i) { return (i & 1) ? -1.0 : 1.0; }

void check_size(const TorusGrid& g, size_t m, const char* what) {
    if (m != static_cast<size_t>(g.size()))
        throw ValidationError(std::string(what) + ": sample count " + std::to_string(m) +
                              " does not match grid size " + std::to_string(g.size()));
}
} // namespace

std::vector<complexd> spectrum_of(const TorusGrid& g, const std::vector<complexd>& samples) {
    const int n = g.size();
    const double h = g.spacing();
    std::vector<complexd> out(n);
    dft_forward(samples.data(), out.data(), n);
    for (int i = 0; i < n; ++i) out[i] *= h * phase(i);
    return out;
}

std::vector<complexd> spectrum_of(const TorusGrid& g, const std::vector<double>& samples) {
    std::vector<complexd> tmp(samples.begin(), samples.end());
    return spectrum_of(g, tmp);
}

std::vector<complexd> samples_from_spectrum(const TorusGrid& g,
                                            const std::vector<complexd>& spectrum) {
    const int n = g.size();
    const double inv_len = 1.0 / g.length();
    std::vector<complexd> tmp(n), out(n);
    for (int i = 0; i < n; ++i) tmp[i] = spectrum[i] * (phase(i) * inv_len);
    dft_backward(tmp.data(), out.data(), n);
    return out;
}

void hermitian_symmetrize(const TorusGrid& g, std::vector<complexd>& s) {
    const int n = g.size();
    s[0] = s[0].real();
    s[n / 2] = s[n / 2].real();
    for (int i = 1; i < n / 2; ++i) {
        const complexd m = 0.5 * (s[i] + std::conj(s[n - i]));
        s[i] = m;
        s[n - i] = std::conj(m);
    }
}

} // namespace detail

// ---- Field --------------------------------------------------------------

Field::Field(TorusGrid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)),
      cache_(std::make_shared<SpectrumCache>()) {
    detail::check_size(grid_, samples_.size(), "Field");
}

Field Field::zero(const TorusGrid& grid) {
    return Field(grid, std::vector<double>(grid.size(), 0.0));
}

Field Field::from_spectrum(const TorusGrid& grid, std::vector<complexd> spectrum) {
    detail::check_size(grid, spectrum.size(), "Field::from_spectrum");
    detail::hermitian_symmetrize(grid, spectrum);
    auto complex_samples = detail::samples_from_spectrum(grid, spectrum);
    std::vector<double> samples(grid.size());
    for (int j = 0; j < grid.size(); ++j) samples[j] = complex_samples[j].real();
    Field f(grid, std::move(samples));
    std::call_once(f.cache_->once, [&] { f.cache_->values = std::move(spectrum); });
    return f;
}

const std::vector<complexd>& Field::spectrum() const {
    std::call_once(cache_->once,
                   [&] { cache_->values = detail::spectrum_of(grid_, samples_); });
    return cache_->values;
}

double Field::l2_norm() const {
    double s = 0.0;
    for (double v : samples_) s += v * v;
    return std::sqrt(s * grid_.spacing());
}

double Field::sup_norm() const {
    double s = 0.0;
    for (double v : samples_) s = std::max(s, std::abs(v));
    return s;
}

double Field::mass() const {
    double s = 0.0;
    for (double v : samples_) s += v;
    return s * grid_.spacing();
}

bool Field::finite() const {
    return std::all_of(samples_.begin(), samples_.end(),
                       [](double v) { return std::isfinite(v); });
}

// ---- ComplexField -------------------------------------------------------

ComplexField::ComplexField(TorusGrid grid, std::vector<complexd> samples)
    : grid_(grid), samples_(std::move(samples)),
      cache_(std::make_shared<SpectrumCache>()) {
    detail::check_size(grid_, samples_.size(), "ComplexField");
}

ComplexField ComplexField::from_spectrum(const TorusGrid& grid,
                                         std::vector<complexd> spectrum) {
    detail::check_size(grid, spectrum.size(), "ComplexField::from_spectrum");
    auto samples = detail::samples_from_spectrum(grid, spectrum);
    ComplexField f(grid, std::move(samples));
    std::call_once(f.cache_->once, [&] { f.cache_->values = std::move(spectrum); });
    return f;
}

const std::vector<complexd>& ComplexField::spectrum() const {
    std::call_once(cache_->once,
                   [&] { cache_->values = detail::spectrum_of(grid_, samples_); });
    return cache_->values;
}

double ComplexField::l2_norm() const {
    double s = 0.0;
    for (const complexd& v : samples_) s += std::norm(v);
    return std::sqrt(s * grid_.spacing());
}

double ComplexField::sup_norm() const {
    double s = 0.0;
    for (const complexd& v : samples_) s = std::max(s, std::abs(v));
    return s;
}

ComplexField to_complex(const Field& f) {
    std::vector<complexd> s(f.samples().begin(), f.samples().end());
    return ComplexField(f.grid(), std::move(s));
}

// ---- algebra ------------------------------------------------------------

namespace {
void check_same_grid(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid()))
        throw ValidationError("field operands live on different grids");
}
} // namespace

Field operator+(const Field& a, const Field& b) {
    check_same_grid(a, b);
    std::vector<double> s(a.samples());
    for (int j = 0; j < a.grid().size(); ++j) s[j] += b[j];
    return Field(a.grid(), std::move(s));
}

Field operator-(const Field& a, const Field& b) {
    check_same_grid(a, b);
    std::vector<double> s(a.samples());
    for (int j = 0; j < a.grid().size(); ++j) s[j] -= b[j];
    return Field(a.grid(), std::move(s));
}

Field operator*(const Field& a, const Field& b) {
    check_same_grid(a, b);
    std::vector<double> s(a.samples());
    for (int j = 0; j < a.grid().size(); ++j) s[j] *= b[j];
    return Field(a.grid(), std::move(s));
}

Field operator*(double s, const Field& a) {
    std::vector<double> v(a.samples());
    for (double& x : v) x *= s;
    return Field(a.grid(), std::move(v));
}

double inner_product(const Field& a, const Field& b) {
    check_same_grid(a, b);
    double s = 0.0;
    for (int j = 0; j < a.grid().size(); ++j) s += a[j] * b[j];
    return s * a.grid().spacing();
}

} // namespace bolab
