#include "drp/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace drp::csv {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize -0 so outputs stay byte-stable
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("atomic_write: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string coefficients_csv(const SchemeCoefficients& coeffs) {
    std::string out = "k,gamma\n";
    for (int k = -coeffs.m; k <= coeffs.m; ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_double(coeffs.gamma_at(k));
        out += '\n';
    }
    return out;
}

std::string profile_csv(const std::vector<DispersionSample>& samples) {
    std::string out = "phi,xi_tau,eta_tau,vg_over_c\n";
    for (const auto& s : samples) {
        out += format_double(s.phi);
        out += ',';
        out += format_double(s.xi_tau);
        out += ',';
        out += format_double(s.eta_tau);
        out += ',';
        out += format_double(s.vg_over_c);
        out += '\n';
    }
    return out;
}

std::string caustics_csv(const CausticReport& report) {
    std::string out = "phi_c,k_c,U_c,kind,backend,sigma\n";
    for (const auto& p : report.stationary_points) {
        out += format_double(p.phi_c);
        out += ',';
        out += format_double(p.k_c);
        out += ',';
        out += format_double(p.U_c);
        out += ',';
        out += kind_name(p.kind);
        out += ',';
        out += backend_name(report.backend);
        out += ',';
        out += format_double(report.sigma);
        out += '\n';
    }
    return out;
}

std::string f1f2_csv(const std::vector<double>& theta, const std::vector<double>& f1,
                     const std::vector<double>& f2) {
    if (theta.size() != f1.size() || theta.size() != f2.size())
        throw std::invalid_argument("f1f2_csv: mismatched column lengths");
    std::string out = "theta,f1,f2\n";
    for (std::size_t i = 0; i < theta.size(); ++i) {
        out += format_double(theta[i]);
        out += ',';
        out += format_double(f1[i]);
        out += ',';
        out += format_double(f2[i]);
        out += '\n';
    }
    return out;
}

std::string joint_roots_csv(const std::vector<JointRoot>& roots) {
    std::string out = "theta_star,phi_star,f1,f2\n";
    for (const auto& r : roots) {
        out += format_double(r.theta_star);
        out += ',';
        out += format_double(r.phi_star);
        out += ',';
        out += format_double(r.f1_value);
        out += ',';
        out += format_double(r.f2_value);
        out += '\n';
    }
    return out;
}

std::string history_csv(const ErrorHistory& history) {
    std::string out = "t,linf\n";
    for (std::size_t i = 0; i < history.times.size(); ++i) {
        out += format_double(history.times[i]);
        out += ',';
        out += format_double(history.linf[i]);
        out += '\n';
    }
    return out;
}

std::string field_grid_csv(const FieldGrid& grid) {
    std::string out = "t";
    for (double x : grid.x) {
        out += ',';
        out += format_double(x);
    }
    out += '\n';
    for (std::size_t j = 0; j < grid.t.size(); ++j) {
        out += format_double(grid.t[j]);
        for (std::size_t i = 0; i < grid.x.size(); ++i) {
            out += ',';
            out += format_double(grid.values[j * grid.x.size() + i]);
        }
        out += '\n';
    }
    return out;
}

std::string ray_csv(const std::vector<double>& t, double slope) {
    std::string out = "t,x\n";
    for (double ti : t) {
        out += format_double(ti);
        out += ',';
        out += format_double(slope * ti);
        out += '\n';
    }
    return out;
}

}  // namespace drp::csv
