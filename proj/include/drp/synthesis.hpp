#pragma once

#include <vector>

#include "drp/coefficients.hpp"

namespace drp {

// Gram system of the least-squares wavenumber fit on [0, pi/2].
// matrix is m x m, row-major, symmetric positive definite.
struct NormalSystem {
    int m = 0;
    std::vector<double> matrix;
    std::vector<double> rhs;

    double at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * m + j]; }
};

// Closed-form Gram system whose solution minimizes the integrated
// wavenumber error over reduced wavenumbers in [-pi/2, pi/2]:
//   A_ij = 4 * int_0^{pi/2} sin(i z) sin(j z) dz
//   b_i  = 2 * int_0^{pi/2} z sin(i z) dz
NormalSystem build_normal_system(int m);

// Solve the normal system for gamma_1..gamma_m (direct Cholesky).
SchemeCoefficients synthesize_drp(int m);

// Integrated wavenumber error
//   E = 2 * int_0^{pi/2} (z - 2 sum_k gamma_k sin(k z))^2 dz
// evaluated by adaptive quadrature (abs tol 1e-10 or better).
double integrated_error(const SchemeCoefficients& coeffs);

// Modified wavenumber times mesh size, lambda_bar * h = 2 sum_k gamma_k sin(k phi).
double modified_wavenumber(const SchemeCoefficients& coeffs, double phi);

}  // namespace drp
