#include "bolab/initial_conditions.hpp"

#include <cmath>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

Field gaussian_ic(const TorusGrid& g, double amplitude, double center, double width) {
    if (!(width > 0.0) || !std::isfinite(width))
        throw ValidationError("gaussian width must be positive");
    if (!std::isfinite(amplitude) || !std::isfinite(center))
        throw ValidationError("gaussian parameters must be finite");
    return Field::sampled(g, [=](double x) {
        const double r = (x - center) / width;
        return amplitude * std::exp(-r * r);
    });
}

Field bump_ic(const TorusGrid& g, double amplitude, double center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw ValidationError("bump radius must be positive");
    if (!std::isfinite(amplitude) || !std::isfinite(center))
        throw ValidationError("bump parameters must be finite");
    return Field::sampled(g, [=](double x) {
        const double r = (x - center) / radius;
        const double s = 1.0 - r * r;
        if (s <= 0.0) return 0.0;
        return amplitude * std::exp(1.0 - 1.0 / s);
    });
}

Field soliton_ic(const TorusGrid& g, double speed, double center) {
    const double D = 2.0 * M_PI / g.length();
    if (!(speed > D) || !std::isfinite(speed)) {
        std::ostringstream os;
        os << "soliton speed must exceed 2 pi / L = " << D;
        throw ValidationError(os.str());
    }
    const double r = std::exp(-std::atanh(D / speed));
    const double L = g.length();
    return Field::sampled(g, [=](double x) {
        const double theta = 2.0 * M_PI * (x - center) / L;
        return 2.0 * D * (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
    });
}

Field modes_ic(const TorusGrid& g, const std::vector<ModeSpec>& modes) {
    for (const ModeSpec& m : modes) {
        if (m.k < 1 || m.k >= g.size() / 2) {
            std::ostringstream os;
            os << "mode number " << m.k << " must lie in [1, " << g.size() / 2 - 1
               << "] on this grid";
            throw ValidationError(os.str());
        }
        if (!std::isfinite(m.amplitude) || !std::isfinite(m.phase))
            throw ValidationError("mode amplitude and phase must be finite");
    }
    const double L = g.length();
    return Field::sampled(g, [&](double x) {
        double v = 0.0;
        for (const ModeSpec& m : modes)
            v += m.amplitude * std::cos(2.0 * M_PI * m.k * x / L + m.phase);
        return v;
    });
}

Field realize(const InitialCondition& ic, const TorusGrid& g) {
    const auto& p = ic.params;
    auto want = [&](std::size_t count, const char* what) {
        if (p.size() != count) {
            std::ostringstream os;
            os << what << " takes " << count << " parameter(s), got " << p.size();
            throw ValidationError(os.str());
        }
    };
    switch (ic.kind) {
        case IcKind::Gaussian:
            want(3, "ic.kind = gaussian (amplitude, center, width)");
            return gaussian_ic(g, p[0], p[1], p[2]);
        case IcKind::Bump:
            want(3, "ic.kind = bump (amplitude, center, radius)");
            return bump_ic(g, p[0], p[1], p[2]);
        case IcKind::Soliton:
            want(2, "ic.kind = soliton (speed, center)");
            return soliton_ic(g, p[0], p[1]);
        case IcKind::Modes: {
            if (p.empty() || p.size() % 3 != 0)
                throw ValidationError(
                    "ic.kind = modes needs (k, amplitude, phase) triples");
            std::vector<ModeSpec> ms;
            for (std::size_t i = 0; i < p.size(); i += 3) {
                const double kf = p[i];
                if (kf != std::floor(kf))
                    throw ValidationError("mode numbers must be integers");
                ms.push_back({static_cast<int>(kf), p[i + 1], p[i + 2]});
            }
            return modes_ic(g, ms);
        }
        case IcKind::Zero:
            if (!p.empty())
                throw ValidationError("ic.kind = zero takes no parameters");
            return Field::zero(g);
    }
    throw ValidationError("unknown initial-condition kind");
}

} // namespace bolab
