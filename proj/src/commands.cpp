#include "drp/commands.hpp"

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "drp/caustic_algebra.hpp"
#include "drp/csv.hpp"
#include "drp/discrepancy.hpp"
#include "drp/errors.hpp"
#include "drp/stepper.hpp"
#include "drp/synthesis.hpp"

namespace drp {

namespace {

template <typename Body>
int guarded(const Body& body) {
    try {
        body();
        return kExitOk;
    } catch (const NumericalAbort& e) {
        std::cerr << "numerical abort: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::runtime_error& e) {
        // atomic_write reports stream failures as runtime errors
        const std::string what = e.what();
        if (what.rfind("atomic_write", 0) == 0) {
            std::cerr << "io error: " << what << '\n';
            return kExitIo;
        }
        std::cerr << "error: " << what << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace

int cmd_synth(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    return guarded([&] {
        const SchemeCoefficients coeffs = synthesize_drp(cfg.m);
        csv::atomic_write(out_dir / "coefficients.csv", csv::coefficients_csv(coeffs));
    });
}

int cmd_dispersion(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    return guarded([&] {
        const SchemeCoefficients coeffs = synthesize_drp(cfg.m);
        const auto samples =
            sample_profile(coeffs, cfg.grid_spec(), cfg.backend, cfg.phi_samples);
        csv::atomic_write(out_dir / "profile.csv", csv::profile_csv(samples));
    });
}

int cmd_caustics(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    return guarded([&] {
        const SchemeCoefficients coeffs = synthesize_drp(cfg.m);
        const CausticReport report =
            find_caustics(coeffs, cfg.grid_spec(), cfg.backend, cfg.caustic_scan);
        csv::atomic_write(out_dir / "caustics.csv", csv::caustics_csv(report));

        const CausticPolynomialSystem system(coeffs, cfg.sigma, cfg.c);
        const int n = 1001;
        std::vector<double> theta(n), f1c(n), f2c(n);
        for (int i = 0; i < n; ++i) {
            theta[i] = -1.0 + 2.0 * i / (n - 1);
            f1c[i] = f1(system, theta[i]);
            f2c[i] = f2(system, theta[i]);
        }
        csv::atomic_write(out_dir / "f1f2.csv", csv::f1f2_csv(theta, f1c, f2c));
        csv::atomic_write(out_dir / "joint_roots.csv",
                          csv::joint_roots_csv(joint_root_scan(system)));
    });
}

int cmd_simulate(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    return guarded([&] {
        const SchemeCoefficients coeffs = synthesize_drp(cfg.m);
        const GridSpec grid = cfg.grid_spec();

        std::vector<double> initial(cfg.sim_nx);
        for (int i = 0; i < cfg.sim_nx; ++i) {
            const double x = cfg.sim_x_min + i * grid.h;
            initial[i] = packet_value(cfg.packet1, x, 0.0) + packet_value(cfg.packet2, x, 0.0);
        }

        SimulationOptions opts;
        opts.steps = cfg.sim_steps;
        opts.snapshot_stride = cfg.sim_snapshot_stride;
        const FieldGrid field = run_fd_simulation(initial, coeffs, grid, cfg.sim_x_min, opts);
        csv::atomic_write(out_dir / "sim_field.csv", csv::field_grid_csv(field));

        // L_inf error of each snapshot against exact periodic advection of
        // the initial profile at speed c
        const double domain = cfg.sim_nx * grid.h;
        ErrorHistory history;
        for (std::size_t j = 0; j < field.t.size(); ++j) {
            const double t = field.t[j];
            double worst = 0.0;
            for (int i = 0; i < cfg.sim_nx; ++i) {
                double s = field.x[i] - grid.c * t - cfg.sim_x_min;
                s -= domain * std::floor(s / domain);
                const double x_exact = cfg.sim_x_min + s;
                const double exact = packet_value(cfg.packet1, x_exact, 0.0) +
                                     packet_value(cfg.packet2, x_exact, 0.0);
                worst = std::max(worst,
                                 std::fabs(field.values[j * field.x.size() + i] - exact));
            }
            history.times.push_back(t);
            history.linf.push_back(worst);
        }
        csv::atomic_write(out_dir / "sim_history.csv", csv::history_csv(history));
    });
}

int cmd_errormodel(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    return guarded([&] {
        const ErrorHistory history = linf_history(cfg.error_model());
        csv::atomic_write(out_dir / "history.csv", csv::history_csv(history));

        const FieldGrid grid = residual_energy_grid(cfg.energy_window());
        csv::atomic_write(out_dir / "residual_energy.csv", csv::field_grid_csv(grid));

        // characteristic rays x = U_c t for every stationary point
        const SchemeCoefficients coeffs = synthesize_drp(cfg.m);
        const CausticReport report =
            find_caustics(coeffs, cfg.grid_spec(), cfg.backend, cfg.caustic_scan);
        for (std::size_t i = 0; i < report.stationary_points.size(); ++i) {
            const CausticRay ray = caustic_ray(report, report.stationary_points[i].phi_c);
            csv::atomic_write(out_dir / ("ray_" + std::to_string(i) + ".csv"),
                              csv::ray_csv(grid.t, ray.slope));
        }
    });
}

int cmd_discrepancy(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    return guarded([&] {
        const DiscrepancyReport report = build_discrepancy_report(cfg);
        csv::atomic_write(out_dir / "discrepancy.csv", discrepancy_csv(report));
    });
}

}  // namespace drp
