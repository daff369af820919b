#pragma once

#include <vector>

#include "drp/coefficients.hpp"

namespace drp {

// Polynomialized caustic condition in theta = cos(phi).
struct CausticPolynomialSystem {
    SchemeCoefficients coeffs;
    double sigma = 0.0;
    double c = 1.0;

    CausticPolynomialSystem(SchemeCoefficients sc, double courant, double speed)
        : coeffs(std::move(sc)), sigma(courant), c(speed) {
        coeffs.validate();
        if (!(sigma > 0.0)) throw std::invalid_argument("CausticPolynomialSystem: sigma must be positive");
        if (c == 0.0) throw std::invalid_argument("CausticPolynomialSystem: c must be nonzero");
    }
};

// f1(theta) = sigma * sum_{k,l} gamma_k gamma_l [k^2 sin_multiple(k+l, theta)
//                                                - k l cos_multiple(k+l, theta)]
//             + 2 c sum_{k>=1} k^2 gamma_k sin_multiple(k, theta)
double f1(const CausticPolynomialSystem& system, double theta);

// f2(theta) = sum_{k,l} gamma_k gamma_l [cos_multiple(k+l, theta)
//                                        + k l sin_multiple(k+l, theta)]
double f2(const CausticPolynomialSystem& system, double theta);

struct JointRoot {
    double theta_star = 0.0;
    double phi_star = 0.0;  // arccos(theta_star)
    double f1_value = 0.0;
    double f2_value = 0.0;
};

struct JointScanOptions {
    int scan_points = 4096;
    double tol_joint = 1e-8;
};

// Scan theta in [-1, 1], minimize f1^2 + f2^2 around every local minimum,
// keep points where both residuals fall below tol_joint. Contiguous
// below-tolerance runs are collapsed to a single representative.
std::vector<JointRoot> joint_root_scan(const CausticPolynomialSystem& system,
                                       const JointScanOptions& opts = {});

}  // namespace drp
