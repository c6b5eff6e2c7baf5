#include "bolab/grid.hpp"

#include <cmath>

#include "bolab/errors.hpp"

namespace bolab {

TorusGrid::TorusGrid(int n, double length) : n_(n), length_(length) {
    if (n < 8 || n % 2 != 0)
        throw ValidationError("grid size must be even and >= 8, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length))
        throw ValidationError("grid length must be positive and finite");
}

std::vector<double> TorusGrid::points() const {
    std::vector<double> xs(n_);
    for (int j = 0; j < n_; ++j) xs[j] = point(j);
    return xs;
}

std::vector<double> TorusGrid::wavenumbers() const {
    std::vector<double> xs(n_);
    for (int i = 0; i < n_; ++i) xs[i] = wavenumber(i);
    return xs;
}

} // namespace bolab
