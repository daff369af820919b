#pragma once

#include <complex>
#include <string>
#include <vector>

#include "drp/coefficients.hpp"
#include "drp/grid.hpp"

namespace drp {

enum class DispersionBackend {
    GeneralLog,            // phase/damping from the per-step amplification factor
    ThreePointClosedForm,  // published arctan form of the 3-point scheme (m = 1 only)
};

std::string backend_name(DispersionBackend b);

struct DispersionSample {
    double phi = 0.0;
    double xi_tau = 0.0;      // real phase per step
    double eta_tau = 0.0;     // log amplitude per step
    double vg_over_c = 0.0;   // normalized group velocity
};

enum class StationaryKind { Min, Max, InflectionDegenerate, Boundary };

std::string kind_name(StationaryKind k);

struct StationaryPoint {
    double phi_c = 0.0;
    double k_c = 0.0;  // phi_c / h
    double U_c = 0.0;  // physical caustic speed, c * (V_g/c)(phi_c)
    StationaryKind kind = StationaryKind::Boundary;
};

struct CausticReport {
    DispersionBackend backend = DispersionBackend::GeneralLog;
    double sigma = 0.0;
    std::vector<StationaryPoint> stationary_points;  // phi_c ascending in [0, pi]
};

struct CausticRay {
    double slope = 0.0;  // x = slope * t
};

// Tuning constants for the stationary-point scan.
struct CausticScanOptions {
    int scan_points = 4096;
    double bisect_tol = 1e-12;
    double classify_step = 1e-4;
};

// One-step multiplier of the explicit update on a Fourier mode:
//   G(phi) = 1 - 2 i sigma sum_{k>=1} gamma_k sin(k phi)
std::complex<double> amplification_factor(const SchemeCoefficients& coeffs, const GridSpec& grid,
                                          double phi);

// Real phase per step, xi_omega * tau; odd in phi.
double phase_frequency(const SchemeCoefficients& coeffs, const GridSpec& grid,
                       DispersionBackend backend, double phi);

// Log amplitude per step, ln|G|; backend-independent.
double damping_rate(const SchemeCoefficients& coeffs, const GridSpec& grid, double phi);

// Normalized group velocity V_g/c = (1/sigma) d(xi_omega tau)/dphi, analytic.
double group_velocity(const SchemeCoefficients& coeffs, const GridSpec& grid,
                      DispersionBackend backend, double phi);

// Independent derivative oracle: Richardson-extrapolated central difference
// of phase_frequency (steps 1e-4 and 5e-5).
double group_velocity_fd(const SchemeCoefficients& coeffs, const GridSpec& grid,
                         DispersionBackend backend, double phi);

// Stationary points of V_g over [0, pi]: dense scan, bisection polish,
// second-difference classification. phi = 0 and phi = pi are always
// reported as Boundary points (forced by symmetry).
CausticReport find_caustics(const SchemeCoefficients& coeffs, const GridSpec& grid,
                            DispersionBackend backend, const CausticScanOptions& opts = {});

// k = phi / h.
double phi_to_k(const GridSpec& grid, double phi);

// Characteristic line x = U_c * t for the stationary point nearest phi_c.
CausticRay caustic_ray(const CausticReport& report, double phi_c);

// Sampled curves over n uniformly spaced phi in [-pi, pi].
std::vector<DispersionSample> sample_profile(const SchemeCoefficients& coeffs, const GridSpec& grid,
                                             DispersionBackend backend, int n);

}  // namespace drp
