#include "drp/synthesis.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace drp {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(n pi / 2) and cos(n pi / 2), exact.
double sin_half_pi(int n) {
    switch (((n % 4) + 4) % 4) {
        case 1: return 1.0;
        case 3: return -1.0;
        default: return 0.0;
    }
}
double cos_half_pi(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return 1.0;
        case 2: return -1.0;
        default: return 0.0;
    }
}

// Cholesky solve for a small SPD system, row-major.
std::vector<double> spd_solve(int n, const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < j; ++k)
                s -= l[static_cast<std::size_t>(i) * n + k] * l[static_cast<std::size_t>(j) * n + k];
            if (i == j) {
                if (!(s > 0.0)) throw std::runtime_error("spd_solve: matrix not positive definite");
                l[static_cast<std::size_t>(i) * n + j] = std::sqrt(s);
            } else {
                l[static_cast<std::size_t>(i) * n + j] = s / l[static_cast<std::size_t>(j) * n + j];
            }
        }
    }
    std::vector<double> y(n), x(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= l[static_cast<std::size_t>(i) * n + k] * y[k];
        y[i] = s / l[static_cast<std::size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= l[static_cast<std::size_t>(k) * n + i] * x[k];
        x[i] = s / l[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

}  // namespace

NormalSystem build_normal_system(int m) {
    if (m < 1) throw std::invalid_argument("build_normal_system: m must be >= 1");
    NormalSystem sys;
    sys.m = m;
    sys.matrix.resize(static_cast<std::size_t>(m) * m);
    sys.rhs.resize(m);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            double v;
            if (i == j) {
                v = kPi;  // 4 * (pi/4)
            } else {
                v = 2.0 * (sin_half_pi(i - j) / (i - j) - sin_half_pi(i + j) / (i + j));
            }
            sys.matrix[static_cast<std::size_t>(i - 1) * m + (j - 1)] = v;
        }
        sys.rhs[i - 1] =
            2.0 * (sin_half_pi(i) / (static_cast<double>(i) * i) - (kPi / 2.0) * cos_half_pi(i) / i);
    }
    return sys;
}

SchemeCoefficients synthesize_drp(int m) {
    const NormalSystem sys = build_normal_system(m);
    std::vector<double> g = spd_solve(m, sys.matrix, sys.rhs);

    // residual check against the rhs scale
    double rhs_scale = 0.0, res = 0.0;
    for (int i = 0; i < m; ++i) {
        double r = -sys.rhs[i];
        for (int j = 0; j < m; ++j) r += sys.matrix[static_cast<std::size_t>(i) * m + j] * g[j];
        res = std::max(res, std::fabs(r));
        rhs_scale = std::max(rhs_scale, std::fabs(sys.rhs[i]));
    }
    if (res > 1e-12 * std::max(rhs_scale, 1.0))
        throw std::runtime_error("synthesize_drp: linear solve residual too large");

    return SchemeCoefficients(m, std::move(g));
}

double integrated_error(const SchemeCoefficients& coeffs) {
    coeffs.validate();
    const auto integrand = [&](double z) {
        double s = 0.0;
        for (int k = 1; k <= coeffs.m; ++k) s += coeffs.gamma[k - 1] * std::sin(k * z);
        const double d = z - 2.0 * s;
        return d * d;
    };
    double err_est = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, kPi / 2.0, 12, 1e-12, &err_est);
    return 2.0 * value;
}

double modified_wavenumber(const SchemeCoefficients& coeffs, double phi) {
    coeffs.validate();
    double s = 0.0;
    for (int k = 1; k <= coeffs.m; ++k) s += coeffs.gamma[k - 1] * std::sin(k * phi);
    return 2.0 * s;
}

}  // namespace drp
