#pragma once

#include <filesystem>

#include "drp/config.hpp"

namespace drp {

// Exit codes shared by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumerical = 4;

// Each command writes its documented CSV files under out_dir (created if
// missing) and returns an exit code. Diagnostics go to stderr.
int cmd_synth(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_dispersion(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_caustics(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_simulate(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_errormodel(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_discrepancy(const RunConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace drp
