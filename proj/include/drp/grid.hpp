#pragma once

#include <cmath>
#include <stdexcept>

namespace drp {

// Uniform space-time discretization of the advection problem.
// sigma = c * tau / h; tau is derived.
struct GridSpec {
    double c = 1.0;      // advection speed
    double h = 0.01;     // mesh size
    double sigma = 0.9;  // Courant number

    GridSpec() = default;
    GridSpec(double speed, double mesh, double courant) : c(speed), h(mesh), sigma(courant) {
        validate();
    }

    void validate() const {
        if (c == 0.0 || !std::isfinite(c))
            throw std::invalid_argument("GridSpec: c must be finite and nonzero");
        if (!(h > 0.0) || !std::isfinite(h))
            throw std::invalid_argument("GridSpec: h must be positive");
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw std::invalid_argument("GridSpec: sigma must be positive");
    }

    double tau() const { return sigma * h / c; }
};

}  // namespace drp
