#include "drp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "drp/errors.hpp"

namespace drp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThreePointGamma = 0.63662;  // published 3-point coefficient

void require_m1(const SchemeCoefficients& coeffs) {
    if (coeffs.m != 1)
        throw std::domain_error("ThreePointClosedForm backend requires m = 1 coefficients");
}

// 2 sigma sum_k gamma_k sin(k phi) and its phi-derivative.
double mode_sum(const SchemeCoefficients& coeffs, double sigma, double phi) {
    double s = 0.0;
    for (int k = 1; k <= coeffs.m; ++k) s += coeffs.gamma[k - 1] * std::sin(k * phi);
    return 2.0 * sigma * s;
}
double mode_sum_deriv(const SchemeCoefficients& coeffs, double sigma, double phi) {
    double s = 0.0;
    for (int k = 1; k <= coeffs.m; ++k) s += k * coeffs.gamma[k - 1] * std::cos(k * phi);
    return 2.0 * sigma * s;
}

}  // namespace

std::string backend_name(DispersionBackend b) {
    return b == DispersionBackend::GeneralLog ? "general" : "threepoint";
}

std::string kind_name(StationaryKind k) {
    switch (k) {
        case StationaryKind::Min: return "MIN";
        case StationaryKind::Max: return "MAX";
        case StationaryKind::InflectionDegenerate: return "INFLECTION_DEGENERATE";
        case StationaryKind::Boundary: return "BOUNDARY";
    }
    return "UNKNOWN";
}

std::complex<double> amplification_factor(const SchemeCoefficients& coeffs, const GridSpec& grid,
                                          double phi) {
    coeffs.validate();
    grid.validate();
    return {1.0, -mode_sum(coeffs, grid.sigma, phi)};
}

double phase_frequency(const SchemeCoefficients& coeffs, const GridSpec& grid,
                       DispersionBackend backend, double phi) {
    coeffs.validate();
    grid.validate();
    if (backend == DispersionBackend::GeneralLog) {
        return -std::arg(amplification_factor(coeffs, grid, phi));
    }
    require_m1(coeffs);
    const double a = kThreePointGamma * grid.sigma;
    const double num = -(1.0 + a) * std::sin(phi);
    const double den = 1.0 + (a - 1.0) * std::cos(phi);
    return std::atan(num / den);
}

double damping_rate(const SchemeCoefficients& coeffs, const GridSpec& grid, double phi) {
    const std::complex<double> g = amplification_factor(coeffs, grid, phi);
    const double mod = std::abs(g);
    if (mod == 0.0)
        throw DegenerateAmplification("damping_rate: |G| = 0, phase undefined");
    return std::log(mod);
}

double group_velocity(const SchemeCoefficients& coeffs, const GridSpec& grid,
                      DispersionBackend backend, double phi) {
    coeffs.validate();
    grid.validate();
    if (backend == DispersionBackend::GeneralLog) {
        // xi = arctan(S), S = 2 sigma sum gamma_k sin(k phi)
        const double s = mode_sum(coeffs, grid.sigma, phi);
        const double sp = mode_sum_deriv(coeffs, grid.sigma, phi);
        return (sp / (1.0 + s * s)) / grid.sigma;
    }
    require_m1(coeffs);
    const double a = kThreePointGamma * grid.sigma;
    const double num = -(1.0 + a) * std::sin(phi);
    const double den = 1.0 + (a - 1.0) * std::cos(phi);
    const double dnum = -(1.0 + a) * std::cos(phi);
    const double dden = -(a - 1.0) * std::sin(phi);
    return ((dnum * den - num * dden) / (den * den + num * num)) / grid.sigma;
}

double group_velocity_fd(const SchemeCoefficients& coeffs, const GridSpec& grid,
                         DispersionBackend backend, double phi) {
    const auto central = [&](double step) {
        return (phase_frequency(coeffs, grid, backend, phi + step) -
                phase_frequency(coeffs, grid, backend, phi - step)) /
               (2.0 * step);
    };
    const double d1 = central(1e-4);
    const double d2 = central(5e-5);
    return ((4.0 * d2 - d1) / 3.0) / grid.sigma;
}

double phi_to_k(const GridSpec& grid, double phi) {
    grid.validate();
    return phi / grid.h;
}

CausticReport find_caustics(const SchemeCoefficients& coeffs, const GridSpec& grid,
                            DispersionBackend backend, const CausticScanOptions& opts) {
    coeffs.validate();
    grid.validate();
    if (opts.scan_points < 8) throw std::invalid_argument("find_caustics: scan_points too small");

    const auto vg = [&](double phi) { return group_velocity(coeffs, grid, backend, phi); };
    const auto dvg = [&](double phi) { return (vg(phi + 1e-6) - vg(phi - 1e-6)) / 2e-6; };

    const auto make_point = [&](double phi, StationaryKind kind) {
        StationaryPoint p;
        p.phi_c = phi;
        p.k_c = phi / grid.h;
        p.U_c = grid.c * vg(phi);
        p.kind = kind;
        return p;
    };

    const auto classify = [&](double phi) {
        const double s = opts.classify_step;
        const double d2 = (vg(phi + s) - 2.0 * vg(phi) + vg(phi - s)) / (s * s);
        if (d2 > 1e-6) return StationaryKind::Min;
        if (d2 < -1e-6) return StationaryKind::Max;
        return StationaryKind::InflectionDegenerate;
    };

    CausticReport report;
    report.backend = backend;
    report.sigma = grid.sigma;
    report.stationary_points.push_back(make_point(0.0, StationaryKind::Boundary));

    const int n = opts.scan_points;
    std::vector<double> interior;
    double prev_phi = kPi / (n - 1);
    double prev_val = dvg(prev_phi);
    for (int j = 2; j <= n - 2; ++j) {
        const double phi = kPi * j / (n - 1);
        const double val = dvg(phi);
        if ((prev_val < 0.0 && val > 0.0) || (prev_val > 0.0 && val < 0.0) || prev_val == 0.0) {
            double lo = prev_phi, hi = phi;
            double flo = prev_val;
            if (flo == 0.0) {
                interior.push_back(lo);
            } else {
                while (hi - lo > opts.bisect_tol) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = dvg(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((flo < 0.0) == (fm < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                interior.push_back(0.5 * (lo + hi));
            }
        }
        prev_phi = phi;
        prev_val = val;
    }

    std::sort(interior.begin(), interior.end());
    double last = -1.0;
    for (double phi : interior) {
        if (phi < 1e-6 || phi > kPi - 1e-6) continue;   // boundary points reported separately
        if (last >= 0.0 && phi - last < 1e-9) continue; // duplicate bracket
        last = phi;
        report.stationary_points.push_back(make_point(phi, classify(phi)));
    }

    report.stationary_points.push_back(make_point(kPi, StationaryKind::Boundary));
    return report;
}

CausticRay caustic_ray(const CausticReport& report, double phi_c) {
    if (report.stationary_points.empty())
        throw std::invalid_argument("caustic_ray: empty report");
    const auto it = std::min_element(
        report.stationary_points.begin(), report.stationary_points.end(),
        [&](const StationaryPoint& a, const StationaryPoint& b) {
            return std::fabs(a.phi_c - phi_c) < std::fabs(b.phi_c - phi_c);
        });
    return CausticRay{it->U_c};
}

std::vector<DispersionSample> sample_profile(const SchemeCoefficients& coeffs, const GridSpec& grid,
                                             DispersionBackend backend, int n) {
    if (n < 2) throw std::invalid_argument("sample_profile: need at least 2 samples");
    std::vector<DispersionSample> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double phi = -kPi + 2.0 * kPi * i / (n - 1);
        DispersionSample s;
        s.phi = phi;
        s.xi_tau = phase_frequency(coeffs, grid, backend, phi);
        s.eta_tau = damping_rate(coeffs, grid, phi);
        s.vg_over_c = group_velocity(coeffs, grid, backend, phi);
        out.push_back(s);
    }
    return out;
}

}  // namespace drp
