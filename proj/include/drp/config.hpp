#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drp/dispersion.hpp"
#include "drp/wavepacket.hpp"

namespace drp {

// Fully validated run configuration. Defaults reproduce the two-wave-packet
// reference experiment of the 3-point scheme at sigma = 0.9.
struct RunConfig {
    // scheme / analysis
    int m = 1;
    double sigma = 0.9;
    double c = 1.0;
    double h = 0.01;
    DispersionBackend backend = DispersionBackend::GeneralLog;
    int phi_samples = 1024;

    // [caustics]
    CausticScanOptions caustic_scan;

    // [packet1] / [packet2]
    WavePacket packet1{0.0005, 0.0, 1.0, -2.68381};
    WavePacket packet2{0.0005, -102.0, 1.0, -2.51381};

    // [experiment] — L_inf history domain
    double exp_x_min = -11200.0;
    double exp_x_max = 4500.0;
    int exp_nx = 1570001;
    double exp_t_final = 4000.0;
    int exp_nt = 501;

    // [energy_grid] — residual kinetic energy window
    double grid_x_min = -1700.0;
    double grid_x_max = -1520.0;
    int grid_nx = 3601;
    double grid_t_final = 640.0;
    int grid_nt = 81;

    // [simulate]
    int sim_nx = 4096;
    long sim_steps = 50;
    double sim_x_min = -20.48;
    long sim_snapshot_stride = 25;

    GridSpec grid_spec() const { return GridSpec(c, h, sigma); }
    ErrorModelConfig error_model() const;
    ErrorModelConfig energy_window() const;
};

struct ConfigError {
    int line = 0;  // 0 for cross-field constraint violations
    std::string message;
};

struct ParseResult {
    std::optional<RunConfig> config;  // set only when errors is empty
    std::vector<ConfigError> errors;
};

// Line-oriented "key = value" text with [section] headers and '#' comments.
// Unknown keys, type mismatches and constraint violations are all collected
// (not just the first).
ParseResult parse_config(const std::string& text);

}  // namespace drp
