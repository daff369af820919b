#include "drp/caustic_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drp/chebyshev.hpp"

namespace drp {

double f1(const CausticPolynomialSystem& system, double theta) {
    const auto& sc = system.coeffs;
    const int m = sc.m;
    double dsum = 0.0;
    for (int k = -m; k <= m; ++k) {
        const double gk = sc.gamma_at(k);
        if (gk == 0.0) continue;
        for (int l = -m; l <= m; ++l) {
            const double gl = sc.gamma_at(l);
            if (gl == 0.0) continue;
            dsum += gk * gl *
                    (static_cast<double>(k) * k * sin_multiple(k + l, theta) -
                     static_cast<double>(k) * l * cos_multiple(k + l, theta));
        }
    }
    double single = 0.0;
    for (int k = 1; k <= m; ++k)
        single += static_cast<double>(k) * k * sc.gamma[k - 1] * sin_multiple(k, theta);
    return system.sigma * dsum + 2.0 * system.c * single;
}

double f2(const CausticPolynomialSystem& system, double theta) {
    const auto& sc = system.coeffs;
    const int m = sc.m;
    double dsum = 0.0;
    for (int k = -m; k <= m; ++k) {
        const double gk = sc.gamma_at(k);
        if (gk == 0.0) continue;
        for (int l = -m; l <= m; ++l) {
            const double gl = sc.gamma_at(l);
            if (gl == 0.0) continue;
            dsum += gk * gl *
                    (cos_multiple(k + l, theta) +
                     static_cast<double>(k) * l * sin_multiple(k + l, theta));
        }
    }
    return dsum;
}

namespace {

// Golden-section minimization of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1v = f(x1), f2v = f(x2);
    while (b - a > xtol) {
        if (f1v < f2v) {
            b = x2;
            x2 = x1;
            f2v = f1v;
            x1 = b - inv_phi * (b - a);
            f1v = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1v = f2v;
            x2 = a + inv_phi * (b - a);
            f2v = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<JointRoot> joint_root_scan(const CausticPolynomialSystem& system,
                                       const JointScanOptions& opts) {
    if (opts.scan_points < 8) throw std::invalid_argument("joint_root_scan: scan_points too small");
    const int n = opts.scan_points;
    const auto objective = [&](double th) {
        const double a = f1(system, th);
        const double b = f2(system, th);
        return a * a + b * b;
    };

    std::vector<double> theta(n), g(n);
    for (int i = 0; i < n; ++i) {
        theta[i] = -1.0 + 2.0 * i / (n - 1);
        g[i] = objective(theta[i]);
    }

    std::vector<double> accepted;
    const auto consider = [&](double lo, double hi) {
        const double th = golden_min(objective, lo, hi, 1e-13);
        if (std::fabs(f1(system, th)) < opts.tol_joint && std::fabs(f2(system, th)) < opts.tol_joint)
            accepted.push_back(th);
    };
    // endpoints
    if (g[0] <= g[1]) consider(theta[0], theta[1]);
    for (int i = 1; i + 1 < n; ++i)
        if (g[i] <= g[i - 1] && g[i] <= g[i + 1]) consider(theta[i - 1], theta[i + 1]);
    if (g[n - 1] <= g[n - 2]) consider(theta[n - 2], theta[n - 1]);

    std::sort(accepted.begin(), accepted.end());
    const double merge_dist = 2.0 * 2.0 / (n - 1);
    std::vector<JointRoot> out;
    for (double th : accepted) {
        if (!out.empty() && th - out.back().theta_star < merge_dist) {
            // keep the better representative of a contiguous run
            if (objective(th) < out.back().f1_value * out.back().f1_value +
                                    out.back().f2_value * out.back().f2_value) {
                out.back().theta_star = th;
                out.back().phi_star = std::acos(std::clamp(th, -1.0, 1.0));
                out.back().f1_value = f1(system, th);
                out.back().f2_value = f2(system, th);
            }
            continue;
        }
        JointRoot r;
        r.theta_star = th;
        r.phi_star = std::acos(std::clamp(th, -1.0, 1.0));
        r.f1_value = f1(system, th);
        r.f2_value = f2(system, th);
        out.push_back(r);
    }
    return out;
}

}  // namespace drp
