// Command-line front end: scheme synthesis, dispersion profiles, caustic
// reports, the two-wave-packet error experiment, and the reconciliation
// report for the 3-point scheme.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "drp/commands.hpp"
#include "drp/config.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::string backend;
    int m = -1;
    double sigma = -1.0;
};

int load_config(const CliOptions& opts, drp::RunConfig& cfg) {
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path, std::ios::binary);
        if (!in) {
            std::cerr << "cannot open config file '" << opts.config_path << "'\n";
            return drp::kExitIo;
        }
        std::ostringstream text;
        text << in.rdbuf();
        const drp::ParseResult parsed = drp::parse_config(text.str());
        if (!parsed.errors.empty()) {
            for (const auto& err : parsed.errors) {
                if (err.line > 0)
                    std::cerr << opts.config_path << ":" << err.line << ": " << err.message << '\n';
                else
                    std::cerr << opts.config_path << ": " << err.message << '\n';
            }
            return drp::kExitConfig;
        }
        cfg = *parsed.config;
    }
    if (opts.m > 0) cfg.m = opts.m;
    if (opts.sigma > 0.0) cfg.sigma = opts.sigma;
    if (!opts.backend.empty()) {
        if (opts.backend == "general") {
            cfg.backend = drp::DispersionBackend::GeneralLog;
        } else if (opts.backend == "threepoint") {
            cfg.backend = drp::DispersionBackend::ThreePointClosedForm;
        } else {
            std::cerr << "unknown backend '" << opts.backend << "'\n";
            return drp::kExitConfig;
        }
    }
    if (cfg.backend == drp::DispersionBackend::ThreePointClosedForm && cfg.m != 1) {
        std::cerr << "backend 'threepoint' requires m = 1\n";
        return drp::kExitConfig;
    }
    return drp::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DRP scheme synthesis, dispersion analysis and spurious-caustic lab"};
    app.require_subcommand(1);

    CliOptions opts;
    app.add_option("--config", opts.config_path, "configuration file (key = value with sections)");
    app.add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    app.add_option("--backend", opts.backend, "dispersion backend: general | threepoint");
    app.add_option("--m", opts.m, "stencil half-width override");
    app.add_option("--sigma", opts.sigma, "Courant number override");

    auto* synth = app.add_subcommand("synth", "synthesize DRP coefficients");
    auto* dispersion = app.add_subcommand("dispersion", "sample the dispersion relation");
    auto* caustics = app.add_subcommand("caustics", "locate stationary points of the group velocity");
    auto* simulate = app.add_subcommand("simulate", "run the explicit scheme on two wave packets");
    auto* errormodel = app.add_subcommand("errormodel", "analytic two-packet error experiment");
    auto* discrepancy = app.add_subcommand("discrepancy", "reconcile stated vs computed values");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? drp::kExitOk : drp::kExitConfig;
    }

    drp::RunConfig cfg;
    if (const int code = load_config(opts, cfg); code != drp::kExitOk) return code;

    const std::filesystem::path out_dir = opts.out_dir;
    if (synth->parsed()) return drp::cmd_synth(cfg, out_dir);
    if (dispersion->parsed()) return drp::cmd_dispersion(cfg, out_dir);
    if (caustics->parsed()) return drp::cmd_caustics(cfg, out_dir);
    if (simulate->parsed()) return drp::cmd_simulate(cfg, out_dir);
    if (errormodel->parsed()) return drp::cmd_errormodel(cfg, out_dir);
    if (discrepancy->parsed()) return drp::cmd_discrepancy(cfg, out_dir);
    return drp::kExitConfig;
}
