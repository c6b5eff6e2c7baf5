#pragma once

#include <vector>

#include "bolab/field.hpp"

namespace bolab {

// Stock initial data. Every generator validates its parameters and returns a
// sampled Field on the given grid.

// amplitude * exp(-((x - center)/width)^2)
Field gaussian_ic(const TorusGrid& g, double amplitude, double center, double width);

// Compactly supported C-infinity bump, normalized to peak at `amplitude`:
// amplitude * exp(1 - 1/(1 - r^2)) for r = (x - center)/radius inside (-1, 1),
// identically zero outside.
Field bump_ic(const TorusGrid& g, double amplitude, double center, double radius);

// Periodic solitary wave of the Hilbert-dispersion model: with D = 2 pi / L,
//   u(x) = 2 D (1 - r^2) / (1 - 2 r cos(2 pi (x - center)/L) + r^2),
//   r = exp(-artanh(D/speed)),
// which travels at exactly `speed` (requires speed > 2 pi / L; the line-soliton
// profile 4c/(1 + c^2 x^2) is the L -> infinity limit of this family).
Field soliton_ic(const TorusGrid& g, double speed, double center);

// Sum of cosine modes amp * cos(2 pi k x / L + phase), k a positive integer
// below the dealiasing cutoff implied by the grid.
struct ModeSpec {
    int k = 1;
    double amplitude = 1.0;
    double phase = 0.0;
};
Field modes_ic(const TorusGrid& g, const std::vector<ModeSpec>& modes);

// Uniform descriptor used by config-driven runs: a kind plus the flat
// parameter list from `ic.params` (soliton: speed, center; modes: k, amp,
// phase triples; zero: none).
enum class IcKind { Gaussian, Bump, Soliton, Modes, Zero };

struct InitialCondition {
    IcKind kind = IcKind::Zero;
    std::vector<double> params;
};

Field realize(const InitialCondition& ic, const TorusGrid& g);

} // namespace bolab
