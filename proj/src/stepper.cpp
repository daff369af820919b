#include "drp/stepper.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "drp/errors.hpp"
#include "drp/kernels.hpp"

namespace drp {

std::vector<double> step_scheme(const std::vector<double>& state, const SchemeCoefficients& coeffs,
                                const GridSpec& grid) {
    coeffs.validate();
    grid.validate();
    if (state.size() <= 2 * static_cast<std::size_t>(coeffs.m))
        throw std::invalid_argument("step_scheme: need nx > 2m");
    std::vector<double> next(state.size());
    kernels::stencil_step(next.data(), state.data(), state.size(), grid.sigma,
                          coeffs.gamma.data(), coeffs.m);
    return next;
}

FieldGrid run_fd_simulation(const std::vector<double>& initial, const SchemeCoefficients& coeffs,
                            const GridSpec& grid, double x_min, const SimulationOptions& opts) {
    coeffs.validate();
    grid.validate();
    if (opts.steps < 0) throw std::invalid_argument("run_fd_simulation: negative step count");
    if (opts.snapshot_stride < 1)
        throw std::invalid_argument("run_fd_simulation: snapshot_stride must be >= 1");
    if (initial.size() <= 2 * static_cast<std::size_t>(coeffs.m))
        throw std::invalid_argument("run_fd_simulation: need nx > 2m");

    const std::size_t n = initial.size();
    const double initial_amp = kernels::max_abs(initial.data(), n);
    const double cap = opts.instability_cap * std::max(initial_amp, 1e-300);

    FieldGrid out;
    out.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.x[i] = x_min + static_cast<double>(i) * grid.h;

    std::vector<double> cur = initial;
    std::vector<double> next(n);
    const auto snapshot = [&](long step) {
        out.t.push_back(static_cast<double>(step) * grid.tau());
        out.values.insert(out.values.end(), cur.begin(), cur.end());
    };
    snapshot(0);
    for (long step = 1; step <= opts.steps; ++step) {
        kernels::stencil_step(next.data(), cur.data(), n, grid.sigma, coeffs.gamma.data(),
                              coeffs.m);
        cur.swap(next);
        if (kernels::max_abs(cur.data(), n) > cap)
            throw NumericalAbort("run_fd_simulation: amplitude exceeded the instability cap at step " +
                                 std::to_string(step));
        if (step % opts.snapshot_stride == 0 || step == opts.steps) snapshot(step);
    }
    return out;
}

EmpiricalDispersion measure_empirical_dispersion(const SchemeCoefficients& coeffs,
                                                 const GridSpec& grid, int nx, double phi) {
    coeffs.validate();
    grid.validate();
    if (nx <= 2 * coeffs.m)
        throw std::invalid_argument("measure_empirical_dispersion: need nx > 2m");
    const double cycles = phi * nx / (2.0 * std::numbers::pi);
    if (std::fabs(cycles - std::round(cycles)) > 1e-9)
        throw std::invalid_argument(
            "measure_empirical_dispersion: phi must equal 2*pi*j/nx for integer j");

    std::vector<double> re(nx), im(nx);
    for (int i = 0; i < nx; ++i) {
        re[i] = std::cos(phi * i);
        im[i] = std::sin(phi * i);
    }
    const std::vector<double> re1 = step_scheme(re, coeffs, grid);
    const std::vector<double> im1 = step_scheme(im, coeffs, grid);
    // the update is exact on Fourier modes, so u1 = G * u0 elementwise;
    // read G off at index 0 where u0 = 1 + 0i
    const std::complex<double> g(re1[0], im1[0]);
    const double mod = std::abs(g);
    if (mod == 0.0)
        throw DegenerateAmplification("measure_empirical_dispersion: mode annihilated in one step");
    return EmpiricalDispersion{-std::arg(g), std::log(mod)};
}

}  // namespace drp
