// runner.cpp — command implementations: figure data, curves, sweeps, optima

#include "entpres/runner.hpp"

#include "entpres/exact.hpp"
#include "entpres/io.hpp"
#include "entpres/optimize.hpp"
#include "entpres/pulse.hpp"
#include "entpres/tcl.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>

namespace entpres::cli {

namespace {

namespace fs = std::filesystem;

std::vector<double> time_grid(const RunConfig& cfg) {
    if (cfg.points < 2) throw std::invalid_argument("run: need at least 2 grid points");
    if (!(cfg.t_max > 0.0)) throw std::invalid_argument("run: t-max must be > 0");
    std::vector<double> g;
    g.reserve(cfg.points);
    for (std::size_t i = 0; i < cfg.points; ++i)
        g.push_back(cfg.t_max * static_cast<double>(i) / static_cast<double>(cfg.points - 1));
    return g;
}

ReservoirSpec reservoir(const RunConfig& cfg) {
    ReservoirSpec res{cfg.gamma0, cfg.Gamma, 0.0};
    res.validate();
    return res;
}

pulse::Control control(const RunConfig& cfg) {
    if (cfg.no_control) return pulse::NoControl{};
    return pulse::PulseTrain(cfg.period, cfg.width, cfg.intensity);
}

// True when the state lives entirely on |10> and |01>; fills alpha, beta.
bool single_excitation_amplitudes(const fock::StateVector& state, fock::Complex& alpha,
                                  fock::Complex& beta) {
    const auto& basis = state.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto [nA, nB] = basis.occupations(i);
        const bool allowed = (nA == 1 && nB == 0) || (nA == 0 && nB == 1);
        if (!allowed && std::abs(state.amplitudes()(static_cast<Eigen::Index>(i))) > 1e-12)
            return false;
    }
    alpha = state.amplitude(1, 0);
    beta = state.amplitude(0, 1);
    return true;
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::string gfmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

// Emit one curve file, collect its name, and record its label in the sidecar map
// (the CSV format itself has no label column).
void emit(const RunConfig& cfg, std::vector<std::string>& files, nlohmann::json& labels,
          const std::string& name, const FidelityCurve& curve) {
    io::write_curve_csv(join(cfg.out, name), curve);
    if (!curve.label.empty()) labels[name] = curve.label;
    files.push_back(name);
}

void emit_gnuplot(const RunConfig& cfg, std::vector<std::string>& files,
                  const std::vector<std::string>& csvs, const std::string& name,
                  const std::string& title) {
    std::string gp = "# gnuplot script — run: gnuplot -persist " + name + "\n";
    gp += "set datafile separator \",\"\n";
    gp += "set xlabel \"gamma0 t\"\nset ylabel \"fidelity\"\n";
    gp += "set yrange [0:1.05]\nset key bottom left\n";
    gp += "set title \"" + title + "\"\n";
    gp += "plot ";
    for (std::size_t i = 0; i < csvs.size(); ++i) {
        if (i) gp += ", \\\n     ";
        gp += "\"" + csvs[i] + "\" skip 1 using 1:2 with lines title \"" + csvs[i] + "\"";
    }
    gp += "\n";
    io::write_text(join(cfg.out, name), gp);
    files.push_back(name);
}

// --------------------------- commands ----------------------------------------

std::vector<std::string> run_fig2(const RunConfig& cfg, nlohmann::json& labels) {
    if (cfg.gamma_ratio != 1 && cfg.gamma_ratio != 10)
        throw std::invalid_argument("fig2: gamma-ratio must be 1 or 10");
    ReservoirSpec res{cfg.gamma0, cfg.gamma_ratio * cfg.gamma0, 0.0};
    res.validate();
    const auto grid = time_grid(cfg);
    const std::string suffix = "g" + std::to_string(cfg.gamma_ratio);

    std::vector<std::string> files;
    std::vector<std::string> csvs;
    auto state = exact::SingleExcitationState::symmetric();
    FidelityCurve ex = exact_fidelity_curve(state, res, grid);
    ex.label = "exact, symmetric one-excitation state, Gamma/gamma0=" + std::to_string(cfg.gamma_ratio);
    emit(cfg, files, labels, "fig2_" + suffix + "_exact.csv", ex);
    csvs.push_back(files.back());

    // The symmetric state has eta = 2 and the comparison runs without control.
    tcl::TclProblem problem(2.0, res, pulse::NoControl{});
    FidelityCurve tc = tcl::tcl_fidelity_curve(problem, grid);
    tc.label = "tcl, eta=2, no control, Gamma/gamma0=" + std::to_string(cfg.gamma_ratio);
    emit(cfg, files, labels, "fig2_" + suffix + "_tcl.csv", tc);
    csvs.push_back(files.back());

    if (cfg.oracle.enabled) {
        exact::BathDiscretization disc(res, cfg.oracle.modes, cfg.oracle.window);
        FidelityCurve oc = bath_oracle_evolve(state, disc, grid, cfg.oracle.dt);
        oc.label = "bath oracle, L=" + std::to_string(cfg.oracle.modes);
        emit(cfg, files, labels, "fig2_" + suffix + "_oracle.csv", oc);
        csvs.push_back(files.back());
    }
    if (cfg.gnuplot)
        emit_gnuplot(cfg, files, csvs, "fig2_" + suffix + ".gp",
                     "exact vs TCL, Gamma/gamma0=" + std::to_string(cfg.gamma_ratio));
    return files;
}

std::vector<std::string> run_fig3(const RunConfig& cfg, nlohmann::json& labels) {
    const ReservoirSpec res = reservoir(cfg);
    const double eta = fock::eta(resolve_state(cfg.state));
    const auto grid = time_grid(cfg);
    std::vector<std::string> files;
    std::vector<std::string> csvs;

    auto add = [&](const std::string& name, const pulse::Control& ctl, const std::string& label) {
        tcl::TclProblem problem(eta, res, ctl);
        FidelityCurve c = tcl::tcl_fidelity_curve(problem, grid);
        c.label = label;
        emit(cfg, files, labels, name, c);
        csvs.push_back(name);
    };

    if (cfg.panel == "a") {
        add("fig3a_nocontrol.csv", pulse::NoControl{}, "no control");
    } else if (cfg.panel == "b") {
        for (double T : {0.05, 0.1, 0.5}) {
            const double w = std::min(0.05, T);
            add("fig3b_period" + gfmt(T) + ".csv", pulse::PulseTrain(T, w, M_PI),
                "period=" + gfmt(T) + ", width=" + gfmt(w) + ", intensity=pi");
        }
    } else if (cfg.panel == "c") {
        for (double w : {0.01, 0.025, 0.05, 0.1})
            add("fig3c_width" + gfmt(w) + ".csv", pulse::PulseTrain(0.1, w, M_PI),
                "period=0.1, width=" + gfmt(w) + ", intensity=pi");
    } else if (cfg.panel == "d") {
        for (double L : {0.5 * M_PI, M_PI, 2.0 * M_PI})
            add("fig3d_intensity" + gfmt(L) + ".csv", pulse::PulseTrain(0.1, 0.05, L),
                "period=0.1, width=0.05, intensity=" + gfmt(L));
    } else {
        throw std::invalid_argument("fig3: panel must be one of a, b, c, d");
    }
    if (cfg.gnuplot)
        emit_gnuplot(cfg, files, csvs, "fig3" + cfg.panel + ".gp", "fidelity curves, panel " + cfg.panel);
    return files;
}

std::vector<std::string> run_curve(const RunConfig& cfg, nlohmann::json& labels) {
    const ReservoirSpec res = reservoir(cfg);
    const fock::StateVector state = resolve_state(cfg.state);
    const double eta = fock::eta(state);
    const pulse::Control ctl = control(cfg);
    const auto grid = time_grid(cfg);

    std::vector<std::string> files;
    std::vector<std::string> csvs;
    tcl::TclProblem problem(eta, res, ctl);
    FidelityCurve tc = tcl::tcl_fidelity_curve(problem, grid);

    fock::Complex alpha, beta;
    const bool single = single_excitation_amplitudes(state, alpha, beta);
    tc.label = "state=" + cfg.state + ", eta=" + io::format_g(eta) +
               (single ? "" : ", tcl-only (no exact benchmark)");
    emit(cfg, files, labels, "curve_tcl.csv", tc);
    csvs.push_back("curve_tcl.csv");

    if (single && cfg.no_control) {
        const exact::SingleExcitationState s0(alpha, beta);
        FidelityCurve ex = exact_fidelity_curve(s0, res, grid);
        ex.label = "exact, state=" + cfg.state;
        emit(cfg, files, labels, "curve_exact.csv", ex);
        csvs.push_back("curve_exact.csv");
    }
    if (cfg.oracle.enabled) {
        if (!single)
            throw std::invalid_argument(
                "curve: the bath oracle requires a state on the one-excitation pair |10>, |01>");
        if (!cfg.no_control)
            throw std::invalid_argument("curve: the bath oracle covers uncontrolled dynamics only");
        const exact::SingleExcitationState s0(alpha, beta);
        exact::BathDiscretization disc(res, cfg.oracle.modes, cfg.oracle.window);
        FidelityCurve oc = bath_oracle_evolve(s0, disc, grid, cfg.oracle.dt);
        oc.label = "bath oracle, L=" + std::to_string(cfg.oracle.modes);
        emit(cfg, files, labels, "curve_oracle.csv", oc);
        csvs.push_back("curve_oracle.csv");
    }
    if (cfg.gnuplot) emit_gnuplot(cfg, files, csvs, "curve.gp", "fidelity, state=" + cfg.state);
    return files;
}

opt::SweepSpec sweep_spec(const RunConfig& cfg) {
    return opt::SweepSpec{opt::param_from_string(cfg.param),
                          cfg.lo,
                          cfg.hi,
                          cfg.samples,
                          pulse::PulseTrain(cfg.period, cfg.width, cfg.intensity),
                          fock::eta(resolve_state(cfg.state)),
                          reservoir(cfg),
                          cfg.t_max};
}

std::vector<std::string> run_sweep(const RunConfig& cfg) {
    const opt::SweepSpec spec = sweep_spec(cfg);
    const auto rows = opt::sweep(spec);
    io::write_sweep_csv(join(cfg.out, "sweep.csv"), spec.free, rows);
    return {"sweep.csv"};
}

std::vector<std::string> run_optimize(const RunConfig& cfg) {
    const opt::OptimizationResult result = opt::optimize_fidelity(sweep_spec(cfg));
    io::write_json(join(cfg.out, "optimize.json"), io::optimization_to_json(result));
    return {"optimize.json"};
}

std::vector<std::string> run_eta(const RunConfig& cfg) {
    const double eta = fock::eta(resolve_state(cfg.state));
    std::printf("%.12g\n", eta);
    io::write_json(join(cfg.out, "eta.json"),
                   nlohmann::json{{"state", cfg.state}, {"eta", eta}});
    return {"eta.json"};
}

} // namespace

// --------------------------- configuration -----------------------------------

double parse_intensity(const std::string& text) {
    std::string body = text;
    double factor = 1.0;
    if (body.size() > 2 && body.substr(body.size() - 2) == "pi") {
        body = body.substr(0, body.size() - 2);
        factor = M_PI;
    } else if (body == "pi") {
        return M_PI;
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(body, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("intensity: cannot parse '" + text + "'");
    }
    if (pos != body.size()) throw std::invalid_argument("intensity: cannot parse '" + text + "'");
    return factor * v;
}

fock::StateVector resolve_state(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{')
        return io::state_from_json(nlohmann::json::parse(spec));

    const fock::FockBasis basis(4);
    fock::Vector v = fock::Vector::Zero(static_cast<Eigen::Index>(basis.size()));
    auto at = [&](std::size_t nA, std::size_t nB) -> fock::Complex& {
        return v(static_cast<Eigen::Index>(basis.index(nA, nB)));
    };
    if (spec == "bell-phi") {
        at(1, 1) = 1.0;
        at(0, 0) = 1.0;
    } else if (spec == "bell-psi") {
        at(1, 0) = 1.0;
        at(0, 1) = 1.0;
    } else if (spec == "dark") {
        at(1, 0) = 1.0;
        at(0, 1) = -1.0;
    } else if (spec == "qutrit-example") {
        at(2, 2) = 1.0;
        at(1, 1) = 1.0;
        at(0, 0) = 2.0;
    } else {
        throw std::invalid_argument(
            "state: unknown preset '" + spec +
            "' (expected bell-phi, bell-psi, dark, qutrit-example, or inline JSON)");
    }
    return fock::StateVector(basis, std::move(v)); // constructor normalizes
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig base) {
    for (const auto& [key, value] : j.items()) {
        if (key == "command") base.command = value.get<std::string>();
        else if (key == "gamma0") base.gamma0 = value.get<double>();
        else if (key == "gamma") base.Gamma = value.get<double>();
        else if (key == "gamma-ratio") base.gamma_ratio = value.get<int>();
        else if (key == "panel") base.panel = value.get<std::string>();
        else if (key == "state") base.state = value.is_string() ? value.get<std::string>() : value.dump();
        else if (key == "no-control") base.no_control = value.get<bool>();
        else if (key == "period") base.period = value.get<double>();
        else if (key == "width") base.width = value.get<double>();
        else if (key == "intensity")
            base.intensity = value.is_string() ? parse_intensity(value.get<std::string>())
                                               : value.get<double>();
        else if (key == "t-max") base.t_max = value.get<double>();
        else if (key == "points") base.points = value.get<std::size_t>();
        else if (key == "out") base.out = value.get<std::string>();
        else if (key == "gnuplot") base.gnuplot = value.get<bool>();
        else if (key == "oracle") base.oracle.enabled = value.get<bool>();
        else if (key == "oracle-modes") base.oracle.modes = value.get<std::size_t>();
        else if (key == "oracle-window") base.oracle.window = value.get<double>();
        else if (key == "oracle-dt") base.oracle.dt = value.get<double>();
        else if (key == "param") base.param = value.get<std::string>();
        else if (key == "lo") base.lo = value.get<double>();
        else if (key == "hi") base.hi = value.get<double>();
        else if (key == "samples") base.samples = value.get<std::size_t>();
        else throw std::runtime_error("config: unknown key '" + key + "'");
    }
    return base;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
    return nlohmann::json{{"command", cfg.command},
                          {"gamma0", cfg.gamma0},
                          {"gamma", cfg.Gamma},
                          {"gamma-ratio", cfg.gamma_ratio},
                          {"panel", cfg.panel},
                          {"state", cfg.state},
                          {"no-control", cfg.no_control},
                          {"period", cfg.period},
                          {"width", cfg.width},
                          {"intensity", cfg.intensity},
                          {"t-max", cfg.t_max},
                          {"points", cfg.points},
                          {"out", cfg.out},
                          {"gnuplot", cfg.gnuplot},
                          {"oracle", cfg.oracle.enabled},
                          {"oracle-modes", cfg.oracle.modes},
                          {"oracle-window", cfg.oracle.window},
                          {"oracle-dt", cfg.oracle.dt},
                          {"param", cfg.param},
                          {"lo", cfg.lo},
                          {"hi", cfg.hi},
                          {"samples", cfg.samples}};
}

std::vector<std::string> run(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    fs::create_directories(cfg.out);

    std::vector<std::string> files;
    nlohmann::json labels = nlohmann::json::object();
    if (cfg.command == "fig2") files = run_fig2(cfg, labels);
    else if (cfg.command == "fig3") files = run_fig3(cfg, labels);
    else if (cfg.command == "curve") files = run_curve(cfg, labels);
    else if (cfg.command == "sweep") files = run_sweep(cfg);
    else if (cfg.command == "optimize") files = run_optimize(cfg);
    else if (cfg.command == "eta") files = run_eta(cfg);
    else throw std::invalid_argument("run: unknown command '" + cfg.command + "'");

    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::string sidecar_name = cfg.command;
    if (cfg.command == "fig2") sidecar_name += "_g" + std::to_string(cfg.gamma_ratio);
    if (cfg.command == "fig3") sidecar_name += cfg.panel;
    sidecar_name += ".meta.json";
    io::write_json(join(cfg.out, sidecar_name),
                   nlohmann::json{{"version", kVersion},
                                  {"command", cfg.command},
                                  {"config", config_to_json(cfg)},
                                  {"outputs", files},
                                  {"labels", labels},
                                  {"wall_ms", wall.count()}});
    files.push_back(sidecar_name);

    std::vector<std::string> paths;
    paths.reserve(files.size());
    for (const auto& f : files) paths.push_back(join(cfg.out, f));
    return paths;
}

} // namespace entpres::cli
