// main.cpp — entpres command-line tool: fidelity curves, figure data, sweeps,
// and pulse-parameter optimization for two oscillators in a common Lorentzian
// reservoir

#include "entpres/io.hpp"
#include "entpres/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

using entpres::cli::RunConfig;

// Find --config in argv before the real parse so the file's values become the
// defaults and explicit flags override them.
std::string find_config_arg(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return argv[i + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return {};
}

void add_shared_options(CLI::App* cmd, RunConfig& cfg, std::string& intensity_text) {
    cmd->add_option("--gamma0", cfg.gamma0, "decay rate gamma0 (sets the unit system)")
        ->capture_default_str();
    cmd->add_option("--gamma", cfg.Gamma, "reservoir spectral width Gamma, units of gamma0")
        ->capture_default_str();
    cmd->add_option("--state", cfg.state,
                    "protected state: bell-phi | bell-psi | dark | qutrit-example | inline JSON")
        ->capture_default_str();
    cmd->add_option("--period", cfg.period, "pulse period T, units of 1/gamma0")
        ->capture_default_str();
    cmd->add_option("--width", cfg.width, "pulse width, units of 1/gamma0")->capture_default_str();
    cmd->add_option("--intensity", intensity_text,
                    "pulse phase area (plain number, or a multiple of pi like '1pi')");
    cmd->add_flag("--no-control", cfg.no_control, "disable the pulse train");
    cmd->add_option("--t-max", cfg.t_max, "end of the time grid, units of 1/gamma0")
        ->capture_default_str();
    cmd->add_option("--points", cfg.points, "number of grid points")->capture_default_str();
    cmd->add_option("--out", cfg.out, "output directory")->capture_default_str();
    cmd->add_option("--config", "JSON config file; explicit flags override its values");
    cmd->add_flag("--gnuplot", cfg.gnuplot, "also emit a gnuplot script for the CSVs");
    cmd->add_flag("--oracle", cfg.oracle.enabled, "also run the discretized-bath oracle");
    cmd->add_option("--oracle-modes", cfg.oracle.modes, "bath oracle mode count")
        ->capture_default_str();
    cmd->add_option("--oracle-window", cfg.oracle.window,
                    "bath oracle frequency half-width (0 = 20*Gamma)")
        ->capture_default_str();
    cmd->add_option("--oracle-dt", cfg.oracle.dt, "bath oracle RK4 step")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string intensity_text;

    try {
        const std::string config_path = find_config_arg(argc, argv);
        if (!config_path.empty())
            cfg = entpres::cli::config_from_json(entpres::io::read_json(config_path), cfg);

        CLI::App app{"entpres — entanglement preservation under pulse control"};
        app.require_subcommand(1);

        auto* fig2 = app.add_subcommand("fig2", "exact vs TCL comparison curves");
        fig2->add_option("--gamma-ratio", cfg.gamma_ratio, "Gamma/gamma0, 1 or 10")
            ->capture_default_str();

        auto* fig3 = app.add_subcommand("fig3", "controlled fidelity curve families");
        fig3->add_option("--panel", cfg.panel, "a (no control) | b (vary T) | c (vary width) | d (vary intensity)")
            ->capture_default_str();

        auto* curve = app.add_subcommand("curve", "one fidelity curve for a chosen state/control");
        auto* sweep = app.add_subcommand("sweep", "fidelity vs one pulse parameter");
        auto* optimize = app.add_subcommand("optimize", "maximize fidelity over one pulse parameter");
        auto* eta_cmd = app.add_subcommand("eta", "leakage coefficient of a protected state");

        for (CLI::App* cmd : {fig2, fig3, curve, sweep, optimize, eta_cmd})
            add_shared_options(cmd, cfg, intensity_text);

        for (CLI::App* cmd : {sweep, optimize}) {
            cmd->add_option("--param", cfg.param, "free parameter: period | width | intensity")
                ->capture_default_str();
            cmd->add_option("--lo", cfg.lo, "lower bound")->capture_default_str();
            cmd->add_option("--hi", cfg.hi, "upper bound")->capture_default_str();
            cmd->add_option("--samples", cfg.samples, "sweep sample count")->capture_default_str();
        }

        CLI11_PARSE(app, argc, argv);

        cfg.command = app.get_subcommands().front()->get_name();
        if (!intensity_text.empty()) cfg.intensity = entpres::cli::parse_intensity(intensity_text);

        for (const std::string& path : entpres::cli::run(cfg))
            std::printf("wrote %s\n", path.c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
