#pragma once

#include <vector>

#include "drp/coefficients.hpp"
#include "drp/grid.hpp"
#include "drp/wavepacket.hpp"

namespace drp {

// One explicit update u_i <- u_i - sigma sum_k gamma(k) u_{i+k} on a
// periodic grid. Requires state.size() > 2m.
std::vector<double> step_scheme(const std::vector<double>& state, const SchemeCoefficients& coeffs,
                                const GridSpec& grid);

struct SimulationOptions {
    long steps = 0;
    long snapshot_stride = 1;      // store every stride-th step (plus step 0)
    double instability_cap = 1e6;  // abort when max|u| exceeds cap * max|u0|
};

// March the explicit scheme, recording snapshots into a FieldGrid whose x
// axis starts at x_min with spacing grid.h. Throws NumericalAbort if the
// run blows up past the instability cap.
FieldGrid run_fd_simulation(const std::vector<double>& initial, const SchemeCoefficients& coeffs,
                            const GridSpec& grid, double x_min, const SimulationOptions& opts);

struct EmpiricalDispersion {
    double xi_tau = 0.0;
    double eta_tau = 0.0;
};

// Step one complex monochromatic mode and read off the per-step phase
// rotation and log amplitude. phi must be commensurate with the periodic
// grid: phi = 2 pi j / nx for integer j.
EmpiricalDispersion measure_empirical_dispersion(const SchemeCoefficients& coeffs,
                                                 const GridSpec& grid, int nx, double phi);

}  // namespace drp
