// runner.hpp — resolved run configuration and the command implementations
// behind the CLI (figure reproduction, curves, sweeps, optimization, eta)

#pragma once

#include "entpres/core.hpp"
#include "entpres/fock.hpp"

#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace entpres::cli {

struct OracleOptions {
    bool enabled = false;
    std::size_t modes = 400; // discretized bath modes L
    double window = 0.0;     // frequency half-width; 0 selects 20*Gamma
    double dt = 1e-3;        // fixed RK4 step
};

// Everything one run needs; serializable so a sidecar can regenerate the run.
struct RunConfig {
    std::string command = "curve"; // fig2 | fig3 | curve | sweep | optimize | eta

    double gamma0 = 1.0;
    double Gamma = 1.0;
    int gamma_ratio = 10;      // fig2: Gamma/gamma0, 1 or 10
    std::string panel = "a";   // fig3: a | b | c | d

    std::string state = "bell-phi"; // preset name or inline state JSON

    bool no_control = false;
    double period = 0.1;
    double width = 0.05;
    double intensity = M_PI;

    double t_max = 3.0;
    std::size_t points = 600;

    std::string out = "out";
    bool gnuplot = false;

    OracleOptions oracle;

    // sweep / optimize
    std::string param = "intensity";
    double lo = 0.0;
    double hi = 2.0 * M_PI;
    std::size_t samples = 64;
};

// "--intensity 1pi" style values: a plain number, or a multiple of pi with the
// literal suffix "pi".
double parse_intensity(const std::string& text);

// Named presets (bell-phi, bell-psi, dark, qutrit-example) or inline JSON
// ({"per_mode_dim": ..., "amplitudes": [[re, im], ...]}).
fock::StateVector resolve_state(const std::string& spec);

// Apply the known keys of a config JSON on top of `base`; unknown keys are an
// error so typos cannot silently change a run.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base);
nlohmann::json config_to_json(const RunConfig& cfg);

// Execute cfg.command; creates cfg.out, writes the data files plus one
// <command>.meta.json sidecar (resolved config, version, wall time), and
// returns every path written. Data files are byte-identical across reruns of
// the same config; only the sidecar's wall time varies.
std::vector<std::string> run(const RunConfig& cfg);

} // namespace entpres::cli
