#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "drp/caustic_algebra.hpp"
#include "drp/coefficients.hpp"
#include "drp/dispersion.hpp"
#include "drp/wavepacket.hpp"

namespace drp::csv {

// 17 significant digits, C locale, '.' separator.
std::string format_double(double v);

// Write-temp-then-rename; the final name never holds a partial file.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// "k,gamma" with the antisymmetric extension, k = -m..m.
std::string coefficients_csv(const SchemeCoefficients& coeffs);

// "phi,xi_tau,eta_tau,vg_over_c"
std::string profile_csv(const std::vector<DispersionSample>& samples);

// "phi_c,k_c,U_c,kind,backend,sigma"
std::string caustics_csv(const CausticReport& report);

// "theta,f1,f2"
std::string f1f2_csv(const std::vector<double>& theta, const std::vector<double>& f1,
                     const std::vector<double>& f2);

// "theta_star,phi_star,f1,f2"
std::string joint_roots_csv(const std::vector<JointRoot>& roots);

// "t,linf"
std::string history_csv(const ErrorHistory& history);

// Header row "t,v(x_1),...,v(x_nx)" with x values, then one row per t.
std::string field_grid_csv(const FieldGrid& grid);

// "t,x"
std::string ray_csv(const std::vector<double>& t, double slope);

}  // namespace drp::csv
