// Independent numerical oracles used by the test suites. Deliberately
// avoids the library's own quadrature/derivative helpers so that tests
// cross-check implementations rather than restating them.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// Adaptive Simpson quadrature with absolute tolerance.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Panelized so that symmetric node placement cannot alias an oscillatory
// integrand to zero on the first subdivision.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    const int panels = 16;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double pa = a + (b - a) * p / panels;
        const double pb = a + (b - a) * (p + 1) / panels;
        const double fa = f(pa);
        const double fb = f(pb);
        const double fm = f(0.5 * (pa + pb));
        const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_step(f, pa, pb, fa, fm, fb, whole, tol / panels, 40);
    }
    return total;
}

// Richardson-extrapolated central difference.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-4) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

// Seeded generator of random one-sided coefficient sets gamma_1..gamma_m
// (the library expands these antisymmetrically).
inline std::vector<double> random_gammas(std::mt19937& rng, int m, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> g(static_cast<std::size_t>(m));
    for (auto& v : g) v = dist(rng);
    return g;
}

// Solve the full (2m+1)-unknown stationarity system of the integrated
// wavenumber error, unknowns gamma_{-m}..gamma_m, no antisymmetry imposed:
//   sum_k gamma_k \int_0^{pi/2} cos((i-k) z) dz = \int_0^{pi/2} z sin(i z) dz.
// Plain Gaussian elimination with partial pivoting; returns gamma indexed
// by k + m.
// The Gram matrix is of prolate type and its condition number grows fast
// with m, so the elimination runs in quad precision: the oracle solution
// is then exact to far below every tolerance used against it.
inline std::vector<double> full_stationarity_solution(int m) {
    using wide = boost::multiprecision::cpp_bin_float_quad;
    const wide half_pi = boost::math::constants::half_pi<wide>();
    const int n = 2 * m + 1;
    std::vector<std::vector<wide>> a(n, std::vector<wide>(n + 1, wide(0)));
    for (int i = -m; i <= m; ++i) {
        for (int k = -m; k <= m; ++k) {
            const int d = i - k;
            a[i + m][k + m] = d == 0 ? half_pi : sin(d * half_pi) / d;
        }
        a[i + m][n] = i == 0 ? wide(0)
                             : sin(i * half_pi) / (wide(i) * i) - half_pi * cos(i * half_pi) / i;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        if (abs(a[col][col]) < 1e-20)
            throw std::runtime_error("full_stationarity_solution: singular system");
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const wide factor = a[r][col] / a[col][col];
            for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<double> gamma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gamma[i] = static_cast<double>(a[i][n] / a[i][i]);
    return gamma;
}

}  // namespace oracle
