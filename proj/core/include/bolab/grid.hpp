#pragma once

#include <vector>

namespace bolab {

// Uniform grid on the periodic interval [-L/2, L/2).
//
// Sample points:  x_j = -L/2 + j*h,  h = L/n,  j = 0..n-1.
// Wavenumbers:    xi_k = k/L for integer modes k in [-n/2, n/2).
//
// Spectra are stored in transform order: storage index i holds mode
// k = i for i < n/2 and k = i - n otherwise, so the Nyquist mode -n/2
// lives at index n/2. n must be even (the Nyquist bin must be its own
// conjugate partner) and at least 8.
class TorusGrid {
public:
    TorusGrid(int n, double length);

    int size() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double spacing() const noexcept { return length_ / n_; }

    double point(int j) const noexcept { return -0.5 * length_ + j * spacing(); }
    std::vector<double> points() const;

    // Integer mode k for storage index i (wrap-around order).
    int mode_number(int i) const noexcept { return i < n_ / 2 ? i : i - n_; }
    double wavenumber(int i) const noexcept { return mode_number(i) / length_; }
    std::vector<double> wavenumbers() const;

    int nyquist_index() const noexcept { return n_ / 2; }

    // Storage index of integer mode k in [-n/2, n/2).
    int index_of_mode(int k) const noexcept { return k >= 0 ? k : k + n_; }

    friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

private:
    int n_;
    double length_;
};

} // namespace bolab
